# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled move kernel; see _moves_py for the contract."""


def apply_moves_flat(long[::1] v, const long[::1] moves):
    cdef Py_ssize_t t, k, nmoves = moves.shape[0]
    cdef long a, b, c, mn
    for t in range(0, nmoves, 2):
        k = moves[t + 1]
        if moves[t] == 2:
            a = v[k]
            v[k] = v[k + 1]
            v[k + 1] = a
        else:
            a = v[k]
            b = v[k + 1]
            c = v[k + 2]
            mn = a if a < c else c
            v[k] = b + c - mn
            v[k + 1] = mn
            v[k + 2] = a + b - mn
