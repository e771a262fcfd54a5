# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from . import cycles, eulerian, fourreg, multigraph, obstructions, planarity, search_setup, utils
from .eulerian import Trace, apply_trace, dumps_trace, has_eulerian_minor, is_eulerian, loads_trace
from .multigraph import GraphError, GraphFormatError, Multigraph, PreconditionError, format_multigraph, parse_multigraph
from .planarity import is_outerplanar, is_planar
