# -*- coding: utf-8 -*-
# ***************************************************************************
# *                                                                         *
# *  Copyright (c) 2026 MedGuard developers                                 *
# *                                                                         *
# *   This program is free software; you can redistribute it and/or modify  *
# *   it under the terms of the GNU Lesser General Public License (LGPL)    *
# *   as published by the Free Software Foundation; either version 2 of     *
# *   the License, or (at your option) any later version.                   *
# *   for detail see the LICENCE text file.                                 *
# *                                                                         *
# *  This program is distributed in the hope that it will be useful,        *
# *  but WITHOUT ANY WARRANTY; without even the implied warranty of         *
# *  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the          *
# *  GNU General Public License for more details.                           *
# *                                                                         *
# *  You should have received a copy of the GNU General Public License      *
# *  along with this program.  If not, see <https://www.gnu.org/licenses/>. *
# *                                                                         *
# ***************************************************************************

from setuptools import setup

__version__ = "0.1.0"

setup(
    name='fedlab.medguard',
    version=__version__,
    packages=[
        'fedlab',
        'fedlab.medguard',
        'fedlab.medguard.nn',
        'fedlab.medguard.data',
        'fedlab.medguard.privacy',
        'fedlab.medguard.aggregation',
        'fedlab.medguard.adversary',
        'fedlab.medguard.simulator',
        'fedlab.medguard.cli',
        'fedlab.medguard.utils',
    ],
    description="Deterministic federated learning simulator for medical tabular data",
    python_requires='>=3.8',
    install_requires=[
        "numpy>=1.20",
        "pandas>=1.5",
    ],
    extras_require={
        'tests': ["pytest"],
    },
    package_data={
        'fedlab.medguard': ['resources/data/*.json'],
    },
    entry_points={
        'console_scripts': [
            'medguard=fedlab.medguard.cli:main',
        ],
    },
    include_package_data=True
)
