def window_total(values, width):
    total = 0
    taken = 0
    for value in values:
        if taken == width:
            break
        total += value
        taken += 1
    return total


def window_peak(values, width):
    peak = 0
    taken = 0
    for value in values:
        if taken == width:
            break
        if value > peak:
            peak = value
        taken += 1
    return peak
