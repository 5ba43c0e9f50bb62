"""Exact matrix generators for Weil representations of Sp(2l, r)."""

__version__ = "0.1.0"

from .fields import (CyclotomicContext, ExtensionFieldContext, FieldSpec,
                     InvalidFieldSpec, PrimeFieldContext,
                     find_irreducible_polynomial, legendre, make_field,
                     parse_field_spec)
from .linalg import DenseMatrix, SingularMatrix
from .operators import (DenseOp, FourierOp, MonomialOp, Operator, ProductOp,
                        ScalarOp, WeilParams, identity_op, operators_equal)
from .generators import (WeilGeneratorSet, base_generators, gauss_sum_identity,
                         lambda_scalar, sigma_involution, weil_generators)
from .heisenberg import (DoesNotNormalize, ExtraspecialElement,
                         NotCharacterDiagonal, NotMonomial, NotThetaPower,
                         RecognitionError, comm_exponent, pi_map, realize,
                         recognize)
from .symplectic import (GenToken, NotSymplectic, SpMatrix, decompose,
                         evaluate_word, gen_images, group_order, random_element,
                         sp_assignment, sp_form, weil_assignment, weil_image,
                         weil_image_op)
from .submodules import (NotInvariant, SubmoduleBasis, WrongCharacteristic,
                         representative_indices, restrict, restrict_quotient,
                         spin, submodule_bases, weil_image_irreducible)
from .verification import (CapExceeded, CheckResult, VerificationReport,
                           check_sl23_presentation, closure_order,
                           corrupt_c_entry, mutate_lambda_sign, mutate_u_to_e,
                           run_relation_suite)
