from .fme import FMResult, solve_strict
from .model import (AuxLine, Component, DivisorModel, Exceptional, ModelError, QDivisor,
                    StrictLine, bilinear_slacks, canonical_support, closed_form_slacks,
                    divisor_connected, pairing, parse_component, qdiv_dot, qdiv_self,
                    total_model)
from .nm import (DisconnectedExtensionError, HypothesisError, NMCertificate, NMFailure,
                 NMSearchResult, certificate_from_single_bad_point, check_farkas, extend_nm,
                 extension_order, nm_search, pairing_matrix, verify_nm)
