"""
A q-system that is scattered over F_2 but not over F_4
======================================================

The same eight-dimensional construction in F_(q^4)^4 is built over two
fields.  Over F_16 every point meets it in at most a line; over F_256 some
point meets it in a plane.
"""

from rankmetric import field
from rankmetric import constructions as K
from rankmetric import qsystems as Q

# F_16 as a degree-4 extension of F_2
f16 = field(2, 1, 4)
U = K.construction_U(f16)
print(U)

# scan the 255 nonzero vectors of U, one point each up to F_2-scalars
v = Q.is_scattered(U)
print("scattered over F_2:", v.value, "points scanned:", v.scanned)
print("maximum (n = km/2):", Q.is_maximum_scattered(U).value)

# the largest meet with a 2-dimensional subspace: exactly 3
rep = Q.max_weight(U, 2)
print("max weight on planes:", rep.max_weight, "over", rep.scanned, "planes")

# the same formulas over F_256 = F_(4^4)
f256 = field(2, 2, 4)
U4 = K.construction_U(f256)
v4 = Q.is_scattered(U4)
print("scattered over F_4:", v4.value)
print("witness weight:", v4.witness["weight"])
