# Copyright (C) 2026 The groupoidal developers.
#
# Loading of semigroup descriptions and job files.

import os
import sys

import jinja2
import yaml
from yaml.constructor import ConstructorError

from . import exceptions

STDIN = '-'

# The libyaml bindings are optional.
_SafeLoader = getattr(yaml, 'CSafeLoader', yaml.SafeLoader)


class GroupoidalYamlLoader(_SafeLoader):
    """Safe YAML loader rejecting mappings that repeat a key.

    A repeated key in a table or a job would otherwise silently override the
    earlier one, so the second occurrence is reported with its position.
    """

    def construct_mapping(self, node, deep=False):
        if isinstance(node, yaml.nodes.MappingNode):
            seen = set()
            for key_node, _ in node.value:
                key = self.construct_object(key_node, deep=deep)
                if key in seen:
                    raise ConstructorError(
                        'while constructing a mapping', node.start_mark,
                        'found duplicate key ({})'.format(key),
                        key_node.start_mark)
                seen.add(key)
        return super(GroupoidalYamlLoader, self).construct_mapping(
            node, deep=deep)


def _position(mark):
    if mark is None:
        return {}
    return {'line': mark.line + 1, 'column': mark.column + 1}


def parse(text, source='<string>'):
    """Parse YAML (or JSON) text into plain Python data.

    Raises InputException, with the 1-based position of the problem when
    the parser knows it.
    """
    try:
        return yaml.load(text, Loader=GroupoidalYamlLoader)
    except yaml.MarkedYAMLError as e:
        raise exceptions.InputException(
            'Cannot parse {}: {}'.format(source, e.problem or e.context),
            **_position(e.problem_mark or e.context_mark))
    except yaml.YAMLError as e:
        raise exceptions.InputException(
            'Cannot parse {}: {}'.format(source, e))


def _environment(base_dir, filters, functions):
    env = jinja2.Environment(loader=jinja2.FileSystemLoader(base_dir),
                             auto_reload=False,
                             keep_trailing_newline=True)
    env.filters.update(filters or {})
    env.globals.update(functions or {})
    return env


def render(filename, filters=None, functions=None):
    """Render a description file as a Jinja2 template.

    The process environment is available to the template as env.

    Returns:
        (text, base_dir), base_dir being the directory relative paths in the
        file are resolved against.
    """
    if filename == STDIN:
        base_dir = os.getcwd()
    else:
        base_dir = os.path.dirname(os.path.abspath(filename))
    env = _environment(base_dir, filters, functions)
    try:
        if filename == STDIN:
            template = env.from_string(sys.stdin.read())
        else:
            template = env.get_template(os.path.basename(filename))
        return template.render(env=os.environ), base_dir
    except jinja2.exceptions.TemplateNotFound:
        raise exceptions.InputException(
            'Input file {} not found!'.format(filename))
    except jinja2.exceptions.TemplateSyntaxError as e:
        raise exceptions.InputException(
            'Template error in {}: {}'.format(filename, e.message),
            line=e.lineno)
    except Exception as e:
        raise exceptions.InputException(
            'Error reading input file {}: {}!'.format(filename, e))


def load(filename, filters=None, functions=None):
    """Load a semigroup description or a job file; JSON files are valid
    YAML. Use '-' for stdin.

    Returns:
        (data, base_dir) as parsed from the rendered file.
    """
    text, base_dir = render(filename, filters=filters, functions=functions)
    return parse(text, source=filename), base_dir
