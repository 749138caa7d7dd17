def wrap(index, size):
    if size == 0:
        return 0
    return index % size
