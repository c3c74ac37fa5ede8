# Copyright 2026 The exunits Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact verification of exceptional-unit families.

Polynomials are lists of Python ints, highest degree first.
"""

from ._core import (
    ContradictionError,
    ParseError,
    appendix_scan,
    discriminant,
    disc_in_t,
    eighteen_units,
    embed,
    evertse_bound,
    families,
    galois_group,
    graeffe,
    is_exceptional,
    is_irreducible,
    make_family,
    minpoly,
    parse_poly,
    pell4,
    perron,
    poly_text,
    real_root_count,
    reduced_disc_in_t,
    signature,
    squarefree_part,
    tower_step,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
