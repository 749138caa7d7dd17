def longest_streak(flags):
    best = 0
    run = 0
    for flag in flags:
        if flag:
            run += 1
        else:
            run = 0
        if run > best:
            best = run
    return best
