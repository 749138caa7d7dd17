def dampen(signal, cutoff):
    level = signal
    while level > cutoff:
        level = level // 2
    return level


def amplify(signal, target):
    level = signal
    while level < target:
        level = level * 2 + 1
    return level
