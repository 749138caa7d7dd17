def next_even(n):
    if n % 2 == 1:
        return n + 1
    return n
