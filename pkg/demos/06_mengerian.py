"""
Bounded Mengerian checks
========================

Compare the minimum weighted vertex cover with the maximum c-matching for
every small demand vector c.
"""

from sympow.corpus import bad_hypergraph, complete_multipartite, tree_path_hypergraphs
from sympow.mengerian import check_mengerian_upto, ip_max_matching, ip_min_cover
from sympow.paths import parse_tree, path_hypergraph_tree

B = bad_hypergraph()
ones = [1] * 6
print("B, c = 1: min cover", ip_min_cover(B, ones), "max matching", ip_max_matching(B, ones))
report = check_mengerian_upto(B, 1)
print(f"{len(report.failures)} of {report.tested} demand vectors fail, e.g. {report.failures[0]}")

T = parse_tree("a -> b\nb -> c\nc -> d\n")
print("path tree, t=3:", check_mengerian_upto(path_hypergraph_tree(T, 3), 2).to_dict())
print("K(2,2,2):", check_mengerian_upto(complete_multipartite([2, 2, 2]), 2).clean)

clean = sum(check_mengerian_upto(H, 2).clean for _, _, H in tree_path_hypergraphs(7))
print("tree path hypergraphs on <= 7 vertices, all clean:", clean)
