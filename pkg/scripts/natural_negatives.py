"""Non-mutated inputs on which the theorem conditions fail, with the direct
brace check beside each verdict.

    python3 scripts/natural_negatives.py
"""
from hopfbrace import bracelab as bl
from hopfbrace.crossprod import bicrossed, check_matched_pair, smash, tensor_hopf
from hopfbrace.envs import mainth2_fixtures, mainth_fixtures
from hopfbrace.fixtures import factorization_fixtures
from hopfbrace.report import PreconditionFailed


def v(rep):
    return "pass" if rep.passed else "FAIL"


def main():
    print("group factorizations X = A·H")
    for label, mp in factorization_fixtures().items():
        if not check_matched_pair(mp).passed:
            continue
        try:
            z = v(bl.check_z1_z2(mp))
        except PreconditionFailed as e:
            z = type(e).__name__
        direct_z = v(bl.check_compatibility(bl.HopfBraceData(tensor_hopf(mp.A, mp.H), bicrossed(mp))))
        c1 = v(bl.check_C1_tensor(mp))
        direct_c1 = v(bl.check_compatibility(bl.HopfBraceData(bicrossed(mp), tensor_hopf(mp.A, mp.H))))
        print(f"  {label:10} z1/z2 {z:4} direct {direct_z:4}   C1-tensor {c1:4} direct {direct_c1:4}")
    print("tensor⋈ theorem (E1/E2)")
    for label, (brA, brH, mp2) in mainth2_fixtures():
        rep = bl.check_E1_E2(brA, brH, mp2)
        d = bl.check_compatibility(bl.HopfBraceData(tensor_hopf(brA.first, brH.first), bicrossed(mp2, force=True)))
        print(f"  {label:38} {v(rep):4} direct {v(d):4}  {', '.join(rep.failed())}")
    print("⋈/♯ theorem (C1-C3)")
    for label, (brA, brH, mp1, phi2) in mainth_fixtures():
        rep = bl.check_C1_C2_C3(brA, brH, mp1, phi2)
        d = bl.check_compatibility(bl.HopfBraceData(bicrossed(mp1, force=True),
                                                    smash(brA.second, brH.second, phi2, force=True)))
        print(f"  {label:38} {v(rep):4} direct {v(d):4}  {', '.join(rep.failed())}")


if __name__ == "__main__":
    main()
