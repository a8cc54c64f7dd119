"""
Path hypergraphs of cycles
==========================

H_t(C_n) is t-partite exactly when t divides n, and its Waldschmidt
constant has a closed form. Both are compared against direct computation.
"""

import numpy as np

from sympow.hypergraph import find_r_partition
from sympow.paths import (
    check_t_partite_cycle,
    path_hypergraph_cycle,
    waldschmidt_cycle_path,
)
from sympow.waldschmidt import waldschmidt_via_chi

H = path_hypergraph_cycle(6, 3)
print(H.to_text())

ok, P = check_t_partite_cycle(6, 3)
print("t-partite:", ok, P.named_blocks(H))

# partiteness table: rows n = 2..12, columns t = 2..12
table = np.zeros((11, 11), dtype=int)
for n in range(2, 13):
    for t in range(2, n + 1):
        found = find_r_partition(path_hypergraph_cycle(n, t), t) is not None
        assert found == check_t_partite_cycle(n, t)[0]
        table[n - 2, t - 2] = found
print(table)

for n in range(2, 9):
    row = []
    for t in range(2, n + 1):
        value = waldschmidt_cycle_path(n, t)
        assert value == waldschmidt_via_chi(path_hypergraph_cycle(n, t))
        row.append(str(value))
    print(f"n={n}:", " ".join(row))
