#!/usr/bin/env python
#
# Copyright 2024-2026 Ghent University
#
# This file is part of vsc-severi,
# originally created by the HPC team of Ghent University (http://ugent.be/hpc/en),
# with support of Ghent University (http://ugent.be/hpc),
# the Flemish Supercomputer Centre (VSC) (https://www.vscentrum.be),
# the Flemish Research Foundation (FWO) (http://www.fwo.be/en)
# and the Department of Economy, Science and Innovation (EWI) (http://www.ewi-vlaanderen.be/en).
#
# https://github.com/hpcugent/vsc-severi
#
# vsc-severi is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation v2.
#
# vsc-severi is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with vsc-severi.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Exact-arithmetic workbench for Severi varieties

usage: severi.py [options] verify-algebra|verify-geometry|classify|cremona [model] [coordinates]
"""

from vsc.severi.main import main

if __name__ == '__main__':
    main()
