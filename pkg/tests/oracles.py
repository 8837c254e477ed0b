"""Brute-force reference checks, independent of the package's code paths."""

from collections import Counter


def reference_sort(xs):
    # insertion sort: deliberately not the built-in
    out = []
    for x in xs:
        k = len(out)
        while k > 0 and out[k - 1] > x:
            k -= 1
        out.insert(k, x)
    return out


def same_multiset(a, b):
    return Counter(a) == Counter(b)


def partition_ok(before, after, low, high, pp):
    pivot = before[low]
    return (
        low <= pp <= high
        and after[pp] == pivot
        and all(after[k] <= pivot for k in range(low, pp))
        and all(after[k] > pivot for k in range(pp + 1, high + 1))
        and same_multiset(before[low:high + 1], after[low:high + 1])
        and before[:low] == after[:low]
        and before[high + 1:] == after[high + 1:]
    )


def is_max_heap(xs, hi=None):
    hi = len(xs) - 1 if hi is None else hi
    return all(xs[(k - 1) // 2] >= xs[k] for k in range(1, hi + 1))


def subtree_is_heap(xs, root, hi):
    stack = [root]
    while stack:
        r = stack.pop()
        for c in (2 * r + 1, 2 * r + 2):
            if c <= hi:
                if xs[c] > xs[r]:
                    return False
                stack.append(c)
    return True


def last_at_most(xs, low, high, pivot):
    found = [k for k in range(low, high + 1) if xs[k] <= pivot]
    return found[-1] if found else low


def first_above(xs, low, high, pivot):
    found = [k for k in range(low, high + 1) if xs[k] > pivot]
    return found[0] if found else high


def decimal_digits(x):
    return len(str(x))
