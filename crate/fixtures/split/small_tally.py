def tally(items):
    seen = 0
    for item in items:
        seen += 1
    return seen
