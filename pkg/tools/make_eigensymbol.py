"""Produce a weight-2 modular eigensymbol file with PARI/GP (via cypari2).

Usage: python make_eigensymbol.py N SIGN ap2 [ap3 ...] > out.sym

The symbol is the element of H_1(X_0(N), cusps) whose pairing with the
PARI symbol space (msinit(N, 2, SIGN)) is a common left eigenvector of
T_2, T_3, ... with the given eigenvalues; it is written as a sum of paths
{inf, s} and projected to the SIGN part.  Requires cypari2, which is not a
dependency of the package.
"""

import sys
from fractions import Fraction

import cypari2

from jacobi_modsym.cusps import INFINITY, Cusp
from jacobi_modsym.modsym import ModularSymbol, boundary_check_weight2, format_symbol
from jacobi_modsym.poly import HomPoly, Mat2

pari = cypari2.Pari()
pari.allocatemem(2 * 10 ** 9, silent=True)


def cusp(x):
    s = str(x)
    if s == "oo":
        return INFINITY
    f = Fraction(s)
    return Cusp.make(f.numerator, f.denominator)


def main(argv):
    N, sgn = int(argv[0]), int(argv[1])
    eigen = [int(a) for a in argv[2:]]
    primes = [2, 3, 5, 7, 11, 13][: len(eigen)]
    # PARI symbols are functionals; its sign -1 quotient pairs with our +1 part
    pari("M = msinit(%d, 2, %d); d = msdim(M); g = mspathgens(M)[1]" % (N, -sgn))
    # left eigenvectors: common kernel of T_p^t - a_p
    rows = ", ".join("mattranspose(mshecke(M, %d)) - (%d)*matid(d)" % (p, a) for p, a in zip(primes, eigen))
    ker = pari("matker(matconcat([%s]~))" % rows)
    if int(pari("#%s" % ker)) != 1:
        sys.exit("eigenspace has dimension %s, give more eigenvalues" % pari("#%s" % ker))
    pari("v = %s[,1]; G = matrix(d, #g, i, j, mseval(M, matid(d)[,i], g[j]))" % ker)
    x = pari("matinverseimage(G, v)")
    if int(pari.length(x)) == 0:
        sys.exit("no homology class with the requested pairing")
    gens = pari("g")
    den = pari.denominator(x)
    x = x * den
    paths = []
    for xj, g in zip(x, gens):
        n = int(xj)
        if n:
            paths.append((n, cusp(g[0]), cusp(g[1]), HomPoly((1,))))
    sigma = ModularSymbol.from_paths(2, N, sgn, paths)
    # the eps part is the (-eps)-eigenspace of the involution {a, b} -> {-a, -b}
    sigma = sigma - sigma.transform(Mat2(-1, 0, 0, 1)) if sgn == 1 else sigma + sigma.transform(Mat2(-1, 0, 0, 1))
    terms = {}
    for n, s, P in sigma.terms:
        if not s.is_infinity():
            terms[s] = terms.get(s, 0) + n
    sigma = ModularSymbol(2, N, sgn, tuple((n, s, HomPoly((1,))) for s, n in sorted(terms.items()) if n))
    if not boundary_check_weight2(sigma):
        sys.exit("result is not cuspidal")
    sys.stdout.write("# eigensymbol for level %d sign %+d, a_p = %s (PARI/GP %s)\n"
                     % (N, sgn, " ".join(argv[2:]), ".".join(str(t) for t in pari.version()[:3])))
    sys.stdout.write(format_symbol(sigma))


if __name__ == "__main__":
    main(sys.argv[1:])
