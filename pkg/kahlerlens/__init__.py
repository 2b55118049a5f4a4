#
# Copyright 2026 The kahlerlens developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from . import axis
from . import geometry
from . import mongeampere
from . import polynomial
from . import tables
from . import taylor
from . import tears
from . import utils

from .parsing import parse_expression
from .polynomial import Polynomial


__version__ = '0.1.0'

__all__ = ['axis', 'geometry', 'mongeampere', 'polynomial', 'tables',
           'taylor', 'tears', 'utils', 'parse_expression', 'Polynomial']
