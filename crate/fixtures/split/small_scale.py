def scale(value, factor):
    scaled = value * factor
    if scaled > 10000:
        scaled = 10000
    return scaled
