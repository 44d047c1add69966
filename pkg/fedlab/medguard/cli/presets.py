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

import functools
import json

from fedlab.medguard import get_resource_path
from fedlab.medguard.adversary import ClientBehavior
from fedlab.medguard.data import PartitionPlan
from fedlab.medguard.privacy import DpConfig, KAnonConfig
from fedlab.medguard.simulator import PRIVACY_MODES, ConfigError, SimulationConfig

VARIANTS = ('clean', 'bad_clients')  # Constant


@functools.lru_cache()
def get_presets_database():
    """
    Reads resources/data/presets.json
    returns dict( preset name => {base, variants, privacy} )
    """
    with open(get_resource_path('data', 'presets.json'), 'r', encoding='utf-8') as f:
        return json.load(f)


def preset_names():
    return sorted(get_presets_database())


def resolve_preset(name, variant='clean', privacy='none', seed=0):
    """Builds the SimulationConfig of one preset / variant / privacy combination"""

    db = get_presets_database()
    if name not in db:
        raise ConfigError('Unknown preset {0}, expected one of {1}'.format(name, ', '.join(preset_names())),
                          field='name')
    if variant not in VARIANTS:
        raise ConfigError('Unknown variant {0}, expected one of {1}'.format(variant, ', '.join(VARIANTS)),
                          field='variant')
    if privacy not in PRIVACY_MODES:
        raise ConfigError('Unknown privacy mode {0}, expected one of {1}'.format(privacy, ', '.join(PRIVACY_MODES)),
                          field='privacy')

    preset = db[name]
    base = dict(preset['base'])
    plan = base.pop('partition')
    config = SimulationConfig(**base)
    config.partition = PartitionPlan(plan['client_sizes'], seed)
    config.master_seed = int(seed)
    config.behaviors = {int(cid): ClientBehavior.fromSerializable(b)
                        for cid, b in preset['variants'][variant]['behaviors'].items()}
    config.privacy = privacy
    # both blocks are loaded; privacy selects the active one
    config.dp = DpConfig(**preset['privacy']['dp'])
    config.kanon = KAnonConfig(**preset['privacy']['kanon'])
    return config
