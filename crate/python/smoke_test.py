"""Smoke test for the pytsbalance extension.

Build and install it first, for example with
``maturin develop --release -m crates/py/Cargo.toml`` inside a virtualenv.
"""

import json
import sys

import pytsbalance as tsb


def check(label, ok):
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    return ok


def main():
    results = []
    h9 = tsb.Graph.builtin("h9")
    wheel = tsb.Graph.builtin("wheel", [7])
    k2 = tsb.Graph.builtin("complete", [2])

    vectors = tsb.total_distance_vectors(h9)
    results.append(check("h9 vectors", vectors[0] == [14, 252, 1345, 3711, 6279, 6941, 5065, 2363, 641, 77]
                         and vectors[3] == [14, 252, 1360, 3762, 6333, 6933, 5001, 2307, 620, 74]))

    roots = json.loads(tsb.balancing_probabilities(h9))
    results.append(check("h9 balancing set", roots["display"] == "{0, [0.48215,0.48225]}"
                         and roots["odds_display"] == "{0, [0.93115,0.93125]}"))

    results.append(check("wheel 7 at p=1/2", set(tsb.expected_distances(wheel, "1/2")) == {"1921/448"}
                         and tsb.pts_distance_balanced(wheel, "1/2")))

    check_json = json.loads(tsb.wreath_check(wheel, k2))
    results.append(check("wheel 7 wreath K2", check_json["product_order"] == 896
                         and check_json["product_db"] and check_json["theorem_consistent"]))

    results.append(check("rho on K5", tsb.rho(tsb.Graph.builtin("complete", [5]), [1, 2], 0, 0) == 3))
    results.append(check("h9 orbits", tsb.orbits(h9) == [[0, 1, 2], [3, 4, 5, 6, 7, 8]]))
    results.append(check("graph6 round trip", tsb.Graph.from_graph6(h9.graph6()).edges() == h9.edges()))

    report = json.loads(tsb.report(h9, p="1/2"))
    results.append(check("report", report["balance"]["distance_balanced"]
                         and report["balance"]["ts"]["pts"]["expected_distances"][0] == "139/24"))

    try:
        tsb.total_distance_vectors(tsb.Graph.builtin("cycle", [25]))
        results.append(check("guard error", False))
    except tsb.GuardError:
        results.append(check("guard error", True))
    try:
        tsb.distance_balanced(tsb.Graph(4, [(0, 1), (2, 3)]))
        results.append(check("disconnected error", False))
    except tsb.DisconnectedError:
        results.append(check("disconnected error", True))
    try:
        tsb.pts_distance_balanced(wheel, "0.5")
        results.append(check("decimal probability rejected", False))
    except tsb.TsbError:
        results.append(check("decimal probability rejected", True))

    hits = json.loads(tsb.search(tsb.Graph.from_graph6("ECYW")))
    results.append(check("search hit", len(hits) == 1 and (hits[0]["u"], hits[0]["v"]) == (4, 5)))

    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
