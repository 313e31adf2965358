#!/usr/bin/env python
#
# Copyright 2024-2024 Ghent University
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
Setup for vsc-severi
"""
import vsc.install.shared_setup as shared_setup

maintainers = ('vsc-severi developers', 'vsc-severi@users.noreply.github.com')

PACKAGE = {
    'install_requires': [
        'vsc-base >= 3.5.3',
        'vsc-install >= 0.15.1',
        'numpy >= 1.17',
        'sympy >= 1.7',
    ],
    'tests_require': [
        'mock',
        'hypothesis',
    ],
    'package_data': {
        'vsc.severi': ['fixtures/*.json'],
    },
    'version': '1.0.0',
    'author': [maintainers],
    'maintainer': [maintainers],
    'zip_safe': False,
}


if __name__ == '__main__':
    shared_setup.action_target(PACKAGE)
