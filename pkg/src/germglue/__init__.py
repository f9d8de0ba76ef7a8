"""germglue: exact invariants of analytic space germs and their gluings.

Germs are presented as local polynomial quotient algebras over Q with a
local monomial order.  The package computes standard bases with Mora
normal forms, truncated minimal free resolutions and Betti numbers,
embedding and Krull dimensions, depth and Cohen-Macaulay type, builds
explicit fiber-product presentations of germs glued along a common
subspace, and verifies the closed-form Poincare-series and structure
formulas those gluings satisfy.
"""

from .errors import (DegenerateGluingError, DimensionMismatchError,
                     GermAlgebraError, InternalCheckError, LiftError,
                     NotAGermError, PolynomialParseError, PreconditionError,
                     ResourceLimitError, SeriesQuotientError)
from .poly import (MonomialOrder, Polynomial, format_polynomial,
                   parse_polynomial)
from .mora import DEFAULT_STEP_CAP, StepCounter
from .ideals import (Ideal, compute_standard_basis, ideal_intersection,
                     ideal_membership, leading_ideal_dimension, map_kernel,
                     mora_normal_form, normal_form, spoly)
from .germs import (AnalyticGerm, GermSurjection, Subspace, check_surjective,
                    embedding_dim, full_subspace, is_smooth, kernel_subspace,
                    krull_dim, make_germ, minimalize_presentation,
                    origin_subspace, quotient_surjection, transport_subspace)
from .series import (TruncatedSeries, betti_formula_large,
                     betti_formula_strong, format_series,
                     large_subspace_formula, self_glue_formula, series_add,
                     series_div, series_mul, strongly_large_formula,
                     weakly_large_formula)
from .resolution import (BettiTable, MinimalResolution, PresentedModule,
                         betti_numbers, cm_type, depth, is_cohen_macaulay,
                         is_gorenstein_direct, minimal_free_resolution,
                         poincare_series_direct, residue_betti)
from .gluing import (GluedGerm, GluingDatum, fiber_product_presentation,
                     factor_subspace_x, factor_subspace_y, glued_dim,
                     lift_through, self_glue, transport_to_glued)
from .largeness import (CERTIFIED, REFUTED, THEOREM, ClassificationReport,
                        GluingData, classify_gluing, convolution_check)
from .criteria import (CriterionResult, StructureReport, ci_criterion_direct,
                       ci_criterion_p44, ci_criterion_selfglue,
                       ci_criterion_strong, edim_formula,
                       gorenstein_criterion, hypersurface_criterion,
                       singularity_theorem, smooth_criterion_large,
                       structure_report)
from .germio import (Workspace, format_germ, format_map, format_subspace,
                     format_workspace, load_workspace, parse_workspace)
from .verify import verify_gluing

__version__ = "0.1.0"
