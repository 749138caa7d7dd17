def gap(a, b):
    if a > b:
        return a - b
    return b - a
