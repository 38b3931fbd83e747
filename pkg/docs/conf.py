# -*- coding: utf-8 -*-
#
# groupoidal documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))
import groupoidal

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'groupoidal'
copyright = u'2026 The groupoidal developers'
author = u'The groupoidal developers'

version = groupoidal.version
release = groupoidal.version

language = 'en'

exclude_patterns = ['_build']

pygments_style = 'sphinx'
highlight_language = 'yaml'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'groupoidaldoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'groupoidal', u'groupoidal Documentation',
     [author], 1)
]
