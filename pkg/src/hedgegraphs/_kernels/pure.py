"""Pure-Python component-counting kernel (fallback for the compiled one).

The kernel operates on a flattened union-pair representation: for hedge e,
pairs ``(pu[i], pv[i])`` for ``i in [ptr[e], ptr[e+1])`` chain together the
vertices of each of its hyperedges. Counting components of a sub-hedgegraph
is then a union-find sweep over the pairs of the selected hedges.
"""

NAME = "pure"


def component_count(n, ptr, pu, pv, hedges):
    """Number of connected components of (V, hedges)."""
    parent = list(range(n))
    comps = n
    for e in hedges:
        for i in range(ptr[e], ptr[e + 1]):
            a = pu[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = pv[i]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
                comps -= 1
    return comps


def component_labels(n, ptr, pu, pv, hedges):
    """Per-vertex component labels, canonicalized to the smallest member."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in hedges:
        for i in range(ptr[e], ptr[e + 1]):
            a, b = find(pu[i]), find(pv[i])
            if a != b:
                parent[a] = b
    smallest = {}
    labels = [0] * n
    for v in range(n):
        r = find(v)
        if r not in smallest:
            smallest[r] = v
        labels[v] = smallest[r]
    return labels
