from .exclusion import (CurveExclusionReport, DegreeVerdict, VectorVerdict, exclude_bad_curves,
                        exclusion_to_json, full_support_relaxation, judge_vector,
                        recheck_exclusion)
from .incidence import (ConicHit, collinear_subsets, common_intersection, conic_is_reducible,
                        conics_with_min_incidence, count_collinear_tests, default_threads,
                        pairwise_overlap_table)
from .multvectors import (DegreeBound, EnumerationBudgetExceeded, MultiplicityVector,
                          auto_degree_bound, delta_bound_ok, enumerate_mult_vectors,
                          milnor_bound_ok)
from .stars import StarVerdict, star_configuration_check
