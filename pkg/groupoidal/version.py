# Copyright (C) 2026 The groupoidal developers.

name = 'groupoidal'
version = '0.4.1'
