"""The Cuntz algebra O_n: isometry relations, theta_h, bracket table.

O_n has generators s_i, s_i* with s_i* s_j = delta_ij and
sum_i s_i s_i* = 1; differentiating both relations fixes the calculus.
Every algebra element h gives a derivation theta_h(s_i) = h s_i,
theta_h(s_i*) = -s_i* h which preserves all relations.  With
omega = sum ds_i ds_i*, the elements s_k s_l* are Hamiltonian with
X = theta_(s_k s_l*) and the brackets realize gl(n):

    {s_k s_l*, s_r s_m*} = delta_(l,r) s_k s_m* - delta_(m,k) s_r s_l*.

A wrinkle the bracket table hides: since sum s_i s_i* = 1, the family
theta_(s_k s_l*) spans theta_1, which omega~ kills (d1 = 0), so omega~
is singular on the full family.  The solver ansatz is its traceless
part, which is still commutator closed and acts identically on all
balanced words.

Run:  python demos/cuntz.py
"""


from ncham.algebra import check_local_confluence
from ncham.cartan import check_consistency
from ncham.models import build_cuntz, theta_h

n = 2
model = build_cuntz(n)
calc = model.calculus
s1, s2 = calc.gen("s1"), calc.gen("s2")
s1s, s2s = calc.gen("s1*"), calc.gen("s2*")

print("== relations ==")
print("s1* s1 =", s1s * s1, "   s1* s2 =", s1s * s2)
print("s2 s2* =", s2 * s2s, "  (sum relation, oriented at the largest word)")
print("s1 s2 s3*... stay as they are: s1 s1* =", s1 * s1s)

rep = check_local_confluence(calc)
print("local confluence:", "all %d critical pairs joinable" % len(rep.pairs))

print("\n== theta_h preserves the differential relations ==")
h = s1 * s2s * s2   # normalizes to s1
th = theta_h(calc, h, n)
print("h = s1 s2* s2 ->", h)
print("theta_h(s2)   =", th.apply(s2))
print("consistency   :", "all checks pass" if check_consistency(th).ok
      else "FAILED")

print("\n== omega and Hamiltonian elements ==")
omega = model.omega.omega
print("omega          =", omega)
print("d omega        =", calc.d(omega))
h11 = s1 * s1s
print("theta_(s1 s1*) _| omega =", theta_h(calc, h11, n).iprod(omega))
print("                d(s1 s1*) =", calc.d(h11))

print("\n== the bracket table (n = 2) realizes gl(2) ==")
words = {"s1 s1*": s1 * s1s, "s1 s2*": s1 * s2s,
         "s2 s1*": s2 * s1s, "s2 s2*": s2 * s2s}
for na, a in words.items():
    for nb, b in words.items():
        print("{%s, %s} = %s" % (na, nb, model.solver.poisson(a, b)))

print("\n== the omega~ kernel on the full family ==")
theta_one = theta_h(calc, calc.one(), n)
print("theta_1(s1)    =", theta_one.apply(s1), "  (theta_1 is not zero)")
print("theta_1 _| omega =", theta_one.iprod(omega),
      "  (but omega~ kills it)")
print("solver ansatz size: %d of the full %d"
      % (len(model.space.basis), len(model.v_family)))
