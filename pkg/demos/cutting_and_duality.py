"""
Cutting systems, evasiveness and the trace dual
===============================================

A system is cutting when it meets every hyperplane in a spanning set.  That
happens exactly when it is (k-2, n-m-1)-evasive, and exactly when its code
is minimal.  The demo checks this on random systems, then on the [8,4]
example over F_8 and F_27, and finishes with the trace dual.
"""

import numpy as np

from rankmetric import field
from rankmetric import constructions as K
from rankmetric import qsystems as Q
from rankmetric import rank_codes as R

f8 = field(2, 1, 3)

rows = []
for seed in range(30):
    n = 5 + seed % 3
    U = K.random_qsystem(f8, 3, n, seed)
    rows.append((n, Q.is_cutting_direct(U).value, Q.is_cutting_via_evasive(U).value,
                 R.is_minimal_direct(Q.psi(U)).value))
rows = np.array(rows, dtype=int)
print("n, cutting, evasive, minimal (first 6 rows)")
print(rows[:6])
print("all three agree:", bool(np.all(rows[:, 1] == rows[:, 2]) and np.all(rows[:, 1] == rows[:, 3])))

# the [8,4] system over F_(q^3): every hyperplane is spanned by its meet with U
for q in (2, 3):
    v = Q.is_cutting_direct(K.cutting_84_q3(field(q, 1, 3)))
    print(f"q={q}: cutting={v.value} over {v.scanned} hyperplanes")

# the trace dual of the scattered system, and an explicit matrix onto it
f16 = field(2, 1, 4)
U = K.construction_U(f16)
Ud = Q.tau_prime_dual(U, K.sigma_42(f16))
print("dual equals explicit set:", Q.same_system(Ud, K.construction_U_dual(f16)))
M = K.equivalence_matrix_U()
print(M)
print("M maps U onto it:", Q.same_system(Q.apply_gl(U, M.T), Ud))
