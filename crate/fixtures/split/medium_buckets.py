def bucket_of(value, width):
    if width < 1:
        return 0
    return value // width


def spread_of(values, width):
    low = 0
    high = 0
    started = False
    for value in values:
        slot = bucket_of(value, width)
        if started:
            if slot < low:
                low = slot
            if slot > high:
                high = slot
        else:
            low = slot
            high = slot
            started = True
    return high - low
