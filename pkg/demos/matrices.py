"""The universal calculus on M_n and its canonical symplectic form.

One-forms are tensors in M_n (x) M_n killed by multiplication, with
da = 1 (x) a - a (x) 1; two-forms sit in the triple tensor power with
both partial multiplications vanishing.  With
omega = 1/2 sum dE_ij dE_ij, the antisymmetric matrices are Hamiltonian,
X_S = ad_S, and the Poisson bracket is the matrix commutator.

Run:  python demos/matrices.py
"""

from fractions import Fraction

from ncham.matrixcalc import (MatrixDerivation, TensorForm,
                              antisymmetric_basis)
from ncham.models import build_matrix

model = build_matrix(2)
ns = model.namespace()
E11, E12, E21, E22 = ns["E11"], ns["E12"], ns["E21"], ns["E22"]

print("== the universal calculus on M_2 ==")
print("dE12           =", E12.d())
print("d(dE12)        =", E12.d().d())
print("dE12 in kernel of multiplication:", E12.d().in_kernel())
x = E11 * E12.d() * E21.d()
print("E11 dE12 dE21  =", x, " junctions vanish:", x.in_kernel())

omega = model.omega.omega
print("\nomega = (1/2) sum dE_ij dE_ij =", omega)
print("d omega =", omega.d())

print("\n== antisymmetric matrices are Hamiltonian ==")
S = E12 - E21
ad_S = MatrixDerivation.ad(S.to_matrix())
print("S              =", S)
print("ad_S _| omega  =", ad_S.iprod(omega))
print("            dS =", S.d())
sol = model.solver.solve(S)
print("solver agrees X_S = ad_S:",
      sol.vector_field.coordinates() == ad_S.coordinates())

print("\n== the bracket is the commutator (n = 3) ==")
m3 = build_matrix(3)
basis = antisymmetric_basis(3)
names = ["L1 = E23-E32", "L2 = E31-E13", "L3 = E12-E21"]
reorder = [basis[2], TensorForm.from_matrix(
    [[Fraction(0), Fraction(0), Fraction(-1)],
     [Fraction(0), Fraction(0), Fraction(0)],
     [Fraction(1), Fraction(0), Fraction(0)]]), basis[0]]
for nm in names:
    print(nm)
for i in range(3):
    for j in range(3):
        print("{%s, %s} = %s" % (names[i][:2], names[j][:2],
                                 m3.solver.poisson(reorder[i], reorder[j])))

print("\n== flows are truncated conjugation series ==")
a = E11
series = model.solver.flow(S, a, 2)
print("exp(t ad_S) E11 to order 2:")
print("   ", series)
