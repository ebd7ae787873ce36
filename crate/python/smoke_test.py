"""Smoke test for the pysimcent extension module."""

from fractions import Fraction

import pysimcent as sc


def main():
    two = sc.Complex([["0", "1", "2"], ["1", "2", "3"]])
    assert two.f_vector == [4, 5, 2]
    assert two.facets == [["0", "1", "2"], ["1", "2", "3"]]
    assert sc.Complex.parse(two.emit()).digest == two.digest

    bow = sc.Complex.fixture("k_bow")
    t1 = "0-1-2"
    assert sc.degrees(bow, 2, "adjacency", p=0)[t1] == 3
    assert sc.degrees(bow, 2, "maximal-adjacency", p=0)[t1] == 1

    lap = sc.laplacian(two, 1, 1, 1)
    assert all(lap[i][j] == lap[j][i] for i in range(len(lap)) for j in range(len(lap)))

    eig = sc.centrality(two, "eigenvector", 2, p=1)
    assert all(abs(v[0] - 0.5) < 1e-10 for v in eig.values())

    deg = sc.centrality(two, "degree", 1)
    assert Fraction(deg["1-2"][1]) == Fraction(1, 5)

    clust = sc.centrality(sc.Complex.fixture("k_clust4"), "clustering", 1)
    assert clust["1-2"][1] == "2/3"

    assert sc.q_star(two)[1:] == [6, 2]
    chain = sc.Complex.fixture("t_chain")
    btw = sc.centrality(chain, "betweenness", 2, p=1)
    assert Fraction(btw["1-2-3"][1]) == 1
    close = sc.centrality(chain, "closeness", 2, p=1)
    assert Fraction(close["1-2-3"][1]) == 2

    clean, table = sc.check_oracle(two)
    assert clean and table["degrees"][0] > 0

    gen = sc.generate("pure", 4, 1.0, 7, dim=2)
    assert gen.f_vector == [4, 6, 4]
    try:
        sc.generate("pure", 5, 0.0, 1)
    except sc.SimcentError as e:
        assert str(e).startswith("empty_complex")
    else:
        raise AssertionError("empty complex accepted")

    print("pysimcent smoke test passed")


if __name__ == "__main__":
    main()
