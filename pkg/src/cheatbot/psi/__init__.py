from .algorithm import (
    PsiMap,
    PsiVerdict,
    check_ccr_le_k,
    init_psi,
    refine_to_fixpoint,
    surroundable_set,
)
