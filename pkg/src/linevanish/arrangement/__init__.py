from .core import (Arrangement, ArrangementError, IntersectionLattice, LatticePoint, LineStats,
                   intersection_lattice, is_pencil, lines_through, make_arrangement)
from .sections import GenericityError, plucker_key, restrict_to_plane
from .g31 import (DEFAULT_PLANE, PUBLISHED_PLANE, PUBLISHED_POINTS, gen_g31_published_section,
                  gen_g31_section, g31_forms, label_flats, published_points)
from .generators import (HEXAGON_PARAMETERS, gen_ceva, gen_hexagonal, gen_near_pencils,
                         near_pencil_system)
from .textio import ParseError, format_arrangement, parse_arrangement
