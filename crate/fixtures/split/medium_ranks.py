def rank_band(score):
    if score >= 90:
        return "gold"
    if score >= 70:
        return "silver"
    if score >= 40:
        return "bronze"
    return "none"


def rank_delta(before, after):
    shift = after - before
    if shift < 0:
        shift = 0 - shift
    return shift
