# Rolling metric windows for the ops dashboard.


class WindowStats:
    def __init__(self, low, high, mean):
        self.low = low
        self.high = high
        self.mean = mean

    def get_low(self):
        return self.low

    def get_high(self):
        return self.high

    def get_mean(self):
        return self.mean

    def set_mean(self, mean):
        self.mean = mean


def build_histogram(samples, buckets, top):
    filled = 0
    spilled = 0
    hollow = 0
    step = top // buckets
    if step == 0:
        step = 1
    for sample in samples:
        filled += 1
        slot = sample // step
        if slot >= buckets:
            spilled += 1
            slot = buckets - 1
        if sample == 0:
            hollow += 1
    crowd = filled - hollow
    ratio = 0
    if filled > 0:
        ratio = crowd * 100 // filled
    peak = ratio + spilled
    while peak > 140:
        peak -= 20
    dip = peak % 17
    rise = dip * 3
    if rise > ratio:
        rise = ratio
    midline = rise + crowd
    spread = midline % 23
    wobble = spread + dip
    if wobble > 40:
        wobble = 40
    settle = wobble * 2 - spread
    anchor = settle % 31
    trace = anchor + peak
    return trace


def window_overlap(left, right, width):
    gap = right - left
    if gap > width:
        return 0
    return width - gap
