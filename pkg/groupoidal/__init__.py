# Copyright (C) 2026 The groupoidal developers.

from .version import name, version

__title__ = name
__version__ = version
