"""
The skein invariants built on descending stacks: theta (a Jones-type
invariant with a parameter d), its two-variable companion, and the
Khovanov-valued Kh_{d,d'} with its specializations.

    python demos/theta_and_khdd.py
"""

from khoskein import Theta, d, jones, kh, kh_ddprime, mark_and_decompose, parse_pd, q, t, theta
from khoskein.corpus import HOPF_NEGATIVE_PD, braid_closure
from khoskein.laurent import mu

QQ = q + q**-1

for name, D in (("negative Hopf", parse_pd(HOPF_NEGATIVE_PD)),
                ("Whitehead-type closure", braid_closure([1, 1, -2, 1, -2])),
                ("Borromean rings", braid_closure([1, -2, 1, -2, 1, -2]))):
    tree = mark_and_decompose(D)
    print(f"== {name}: {D.num_components} components, distance {tree.distance}, "
          f"{len(tree.leaves())} leaves")
    th = theta(D, d)
    print(f"theta        = {th}")
    print(f"theta(d=1)   = {th.subs(d=1)}   (Jones: {jones(D)})")
    print(f"Theta(mu=q^2) == theta: {Theta(D, d).subs(mu=q**2) == th}")

    # Kh_{d,d'} on the diagonal is d^r Kh; at d = d' = 1 it is Kh; at
    # d' = 1 and t = -1 it is d (q + 1/q) theta, the extra factors being
    # the unnormalized unknot of Kh and one more power of d.
    r = D.num_components
    print(f"Kh_(2,2) == 2^r Kh:          {kh_ddprime(D, 2, 2) == 2**r * kh(D)}")
    print(f"Kh_(1,1) == Kh:              {kh_ddprime(D, 1, 1) == kh(D)}")
    print(f"Kh_(2,1)(t=-1) == 2(q+1/q)theta(2): "
          f"{kh_ddprime(D, 2, 1).subs(t=-1) == 2 * QQ * theta(D, 2)}\n")
