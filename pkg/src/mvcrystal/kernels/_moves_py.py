"""Pure-Python move kernel; same contract as the compiled backend.

A move path is a flat int sequence (kind, offset, kind, offset, ...).
Kind 2 swaps the entries at offset, offset+1; kind 3 applies the
tropical transform to the entries at offset..offset+2:

    (a, b, c) -> (b + c - min(a, c), min(a, c), a + b - min(a, c))
"""


def apply_moves_flat(v, moves):
    """Apply a flat move path to the mutable int sequence v, in place."""
    for t in range(0, len(moves), 2):
        k = moves[t + 1]
        if moves[t] == 2:
            v[k], v[k + 1] = v[k + 1], v[k]
        else:
            a, b, c = v[k], v[k + 1], v[k + 2]
            mn = a if a < c else c
            v[k] = b + c - mn
            v[k + 1] = mn
            v[k + 2] = a + b - mn
