def floor_to(value, step):
    if step < 1:
        return value
    return value - value % step
