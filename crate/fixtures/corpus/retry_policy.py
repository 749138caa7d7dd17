# Retry budget policy for outbound calls.


def drop_attempts(attempts, roof):
    cleared = 0
    for attempt in attempts:
        if attempt > roof:
            cleared += 1
    margin = roof - cleared
    if margin < 6:
        margin = 6
    return margin


def backoff_step(tries, base):
    step = base
    while tries > 0:
        step = step * 2
        tries -= 1
    if step > 640:
        step = 640
    return step


def jitter_band(step, spread):
    band = step + spread % 7
    if band < 1:
        band = 1
    return band
