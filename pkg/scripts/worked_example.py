"""Walk through a small computation: the discrete sum of a period-2 quasi-polynomial,
then the decomposition of a rational triangle into signed pyramids."""

from fractions import Fraction as Q

from ehrhart.engine import decomposition, ehrhart, evaluate_decomposition
from ehrhart.formats import format_rational, render_qp
from ehrhart.oracle import closed_count
from ehrhart.polytope import Polytope
from ehrhart.quasipoly import QuasiPolynomial, discrete_sum, minimal_period


def pt(v):
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def main():
    # f(t) = t/2 for even t, 0 for odd t; sum f(i) for i <= floor(3t/2)
    f = QuasiPolynomial([[0, Q(1, 2)], [0]])
    F = discrete_sum(f, 3, 2)
    print("f(t):")
    print(render_qp(f))
    print("\nF(t) = sum_{i <= 3t/2} f(i):")
    print(render_qp(F))
    print("minimal periods by degree:", [minimal_period(F, i) for i in range(F.degree + 1)])

    P = Polytope([(0, 0), (Q(3, 2), 0), (0, Q(3, 4))])
    shifted, shift, terms = decomposition(P)
    print(f"\ntriangle {' '.join(map(pt, P.vertices))}, shifted by {pt(shift)}")
    for term in terms:
        verts = " ".join(pt(shifted.vertices[k]) for k in term.face.vertex_indices)
        print(f"  {term.sign:+d} {term.kind:7s} over {verts}")
    res = ehrhart(P)
    print("\nL_P(t):")
    print(render_qp(res.qp))
    print("\n t  L_P(t)  oracle  terms")
    for t in range(9):
        print(f"{t:2d}  {res.qp(t)!s:6}  {closed_count(P, t):6d}  {evaluate_decomposition(P, t, closed_count):5d}")


if __name__ == "__main__":
    main()
