# Shipping rate lookup and the per-package quote path.


class RateCalc:
    def __init__(self, base):
        self.base = base

    def quote(self, pkg):
        charge = self.base + pkg.weight * 3
        bulk = pkg.volume // 1000
        if bulk > 2:
            charge += bulk
        if pkg.zone > 4:
            charge = charge * 2
        return charge

    def floor_rate(self):
        lowest = self.base // 2
        if lowest < 1:
            lowest = 1
        return lowest


def zone_hop(origin, target):
    hops = target - origin
    if hops < 0:
        hops = 0 - hops
    return hops


def fuel_levy(distance, factor):
    levy = distance * factor // 100
    if levy > 400:
        levy = 400
    return levy


def dim_weight(length, width, height):
    volume = length * width * height
    scaled = volume // 5000
    if scaled < 1:
        scaled = 1
    return scaled
