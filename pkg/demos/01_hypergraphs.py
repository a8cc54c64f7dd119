"""
Hypergraphs, covers and the bad configuration
=============================================

Build a few small hypergraphs, look at their minimal vertex covers and
independent sets, and find copies of the three-edge "bad" configuration.
"""

from sympow.corpus import bad_hypergraph, complete_multipartite
from sympow.hypergraph import (
    edge_vertex_incidence,
    find_bad_subhypergraphs,
    find_r_partition,
    independence_number,
    minimal_vertex_covers,
    parse_hypergraph,
)

# the text format is one `edge:` line per hyperedge
H = parse_hypergraph("""
edge: x1 x2 x3
edge: x3 x4 x5
edge: x5 x6 x2
""")
assert H == bad_hypergraph()
print(H)

# rows are edges, columns are vertices
A = edge_vertex_incidence(H)
print(A)
print("vertex degrees:", A.sum(axis=0))

# seven minimal covers; {x2,x3,x5} covers too but is not minimal
for cover in minimal_vertex_covers(H):
    print("cover", H.names(sorted(cover)))

size, witness = independence_number(H)
print("independence number", size, "e.g.", H.names(sorted(witness)))

P = find_r_partition(H, 3)
print("3-partition:", P.named_blocks(H))

# the bad configuration itself, with its role labeling
(w,) = find_bad_subhypergraphs(H)
print("roles:", w.to_dict(H)["roles"])

# the complete 3-partite hypergraph with parts of size 2 has eight copies
K = complete_multipartite([2, 2, 2])
print("bad copies in K(2,2,2):", len(find_bad_subhypergraphs(K)))
