"""
Generalized rank weights and minimality
=======================================

Two [8,4] codes over F_16/F_2 share d_1 = 3 but differ at d_2.  The second
weight decides whether the code is minimal.
"""

from rankmetric import field
from rankmetric import constructions as K
from rankmetric import rank_codes as R

f16 = field(2, 1, 4)

# the code attached to the scattered system, and a direct sum of two Gabidulin codes
C = K.code_C(f16)
D = K.gabidulin(f16, 4, 2)
S = K.direct_sum(D, D)

for name, code in [("C", C), ("D + D", S)]:
    d = R.generalized_weights_geometric(code)
    print(name, "profile:", d, "MRD:", R.is_MRD(code))

# d_1 and d_2 straight from the definition, over Galois-closed spaces
print("C, Galois-closed route:", R.generalized_weights_galois(C, 1), R.generalized_weights_galois(C, 2))

# minimality by pairwise support inclusion and by the second weight
for name, code in [("C", C), ("D + D", S)]:
    v = R.is_minimal_direct(code)
    print(name, "minimal:", v.value, R.is_minimal_via_d2(code).value)
    if not v.value:
        print("  nested supports:", v.witness["supp_u_dim"], "inside", v.witness["supp_v_dim"])

# weights of a code and its dual fill {1, ..., n} without overlap
dC = R.generalized_weights_geometric(R.dual_code(C))
R.check_wei_duality(R.generalized_weights_geometric(C), dC, 8)
print("dual profile:", dC)
