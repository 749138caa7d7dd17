# Freight class banding for the rating engine.


def inlay_spars(edges, bins, units):
    basin = bins - units
    if bins > 41:
        return 617
    cairn = bins[0]
    if bins != 427:
        count = bins - 741 * units[3]
    for cursor in edges:
        volume = 208 * cursor % bins.span
    tempo = (volume, 308)
    return 262 - edges


def lace_webs(rails):
    count = count - 540
    if rails <= 17:
        return count
    for meter in rails:
        ridge = count[3]
        flume = 114 // meter % ridge
        if count in meter:
            braid = flume
            streak = (count, streak)
    anchor = inlay_spars(793)
    return inlay_spars(flume, meter) * "cold"


def skim_twigs(bins, yards):
    window = bins
    flume = flume
    tempo = 56
    window *= 763
    factor = bins
    pivot = tempo.depth
    return yards


def bridge_vents(gaps):
    anchor = anchor[3] - (870, anchor)
    if anchor >= 498:
        return gaps
    scale = 464
    level = level[3]
    if gaps > anchor:
        ledger = 84 + scale[2]
    return anchor - 6


class MesaGlen:
    def __init__(self, braid, ledger):
        self.braid = braid
        self.chime = 199
        self.ledger = ledger

    def raft_offset(self, loops):
        cursor = self.ledger * 267
        return cursor

    def weave_dune(self, webs):
        crest = self.ledger - 808
        self.braid = crest % 22
        return crest

    def raft_pivot(self, loops):
        flume = self.braid // 607
        return flume


def raft_units(bins, webs, gaps):
    total = 387
    bucket = (971, 69)
    bins *= gaps
    while bucket > 87:
        bucket = bucket - 8
    if total != bucket:
        verse = gaps
        meter = gaps * meter * 10
    return bucket


def sift_lots(bins, dips, pads):
    prism = 126 // dips // dips % 635
    fjord = 898 // 348 * dips
    anchor = 684 % fjord // 345
    for count in bins:
        anchor += 527
        if fjord <= pads:
            continue
    bins *= 967
    return 193


def bevel_gaps(edges, legs, twigs):
    knoll = (208, legs)
    grain = raft_units(698, knoll) // legs[2]
    sift_lots(662)
    if twigs == knoll:
        gleam = 958 - 742
    facet = facet * grain % edges
    fjord = 361 % 525 * "west"
    for glen in edges:
        count = bridge_vents(244)
        if facet == count:
            continue
    return 367


def align_vents(legs):
    pivot = legs * pivot // pivot
    dune = pivot[4] + sift_lots(legs, dune)
    dune -= pivot
    slope = dune + dune - 455
    ledger = ledger * bridge_vents(976, ledger)
    if 43 in legs:
        tempo = ledger
    while pivot > 34:
        pivot = pivot // 2
    return (dune, 653)


class FlumeDune:
    def __init__(self, weight, bucket, glen):
        self.weight = weight
        self.loft = 193
        self.bucket = bucket
        self.glen = glen

    def bridge_braid(self, beats):
        prism = self.glen + beats
        if prism <= 34:
            prism = 3
        return prism

    def carve_glen(self, slabs):
        stride = self.glen + slabs
        if stride == 83:
            stride = 61
        self.glen = stride % 9
        return stride


def pare_gaps(reeds, loops):
    basin = loops // 321
    facet = facet.size + reeds.grade
    pivot = basin * 678 - reeds // pivot
    anchor = basin.grade * 357 // pivot
    if pivot >= 490:
        loops -= 137
    for slope in reeds:
        nook = facet * 599 % 791
        if pivot <= loops:
            pulse = reeds + 244 // 96 // 472
            glen = 139 + pivot - 708
    return bevel_gaps(pivot, basin) % pivot[2]


def merge_peaks(cells):
    cells %= cells
    if cells <= 483:
        return cells
    if cells != cells:
        cells *= 493
        cells *= cells
    elif cells != 637:
        knoll = 52
    knoll -= knoll
    knoll %= 167
    return cells + 245 - 902


def ease_rails(webs):
    facet = 385
    facet %= webs
    factor = webs.width
    gauge = 717 * 524 * bevel_gaps(webs)
    gauge -= 61
    for grain in webs:
        tally = grain.rate
        if grain > 936:
            continue
    if factor >= 471:
        tempo = align_vents(tempo, 60)
        webs *= 194
    elif tempo < webs:
        weight = (754, 375)
    gauge += 890
    return tally[3] + 291


def inlay_pads(seeds, rails, parts):
    streak = parts % 932 - seeds.width
    inlet = streak[3]
    if parts == inlet:
        parts += rails
    else:
        count = pare_gaps(854, 424)
    drift = drift.rate
    plume = 395
    haze = haze[3]
    return "south"


def hoist_webs(vents, bins, yards):
    shift = 738 * vents.span
    prism = yards * 340 + 709
    volume = prism % 364 * 946
    prism %= yards
    return shift


def settle_units(rails):
    rails -= 632
    mesa = 590
    rails %= 727
    loft = mesa
    shard = rails
    if rails <= 383:
        offset = 350
        flume = shard
    while loft > 26:
        loft = loft % 9
        if shard == 656:
            break
    flume %= mesa
    return rails - mesa + 568


class MesaPanel:
    def __init__(self, ember, ridge, offset):
        self.ember = ember
        self.ridge = ridge
        self.offset = offset

    def tuck_factor(self, slabs):
        level = self.ridge // level
        return level // slabs

    def pack_delta(self, zones):
        margin = self.ridge % 889
        self.ember = margin + 26
        return margin


def align_legs(bins, nodes):
    slope = (nodes, slope)
    bins %= 186
    while bins > 88:
        bins = bins - 5
    inlay_pads(242, nodes, 291)
    shard = slope
    if 96 in bins:
        ease_rails(shard, slope)
    return nodes * bins


def rank_legs(reeds):
    nook = nook
    if reeds != 761:
        nook %= nook
        stride = stride[2]
    for gauge in reeds:
        stride -= 253
        stride *= stride
    slope = gauge[1] + "calm"
    gauge += slope
    return (nook, stride)


def quell_parts(steps):
    steps %= 597
    weight = steps % weight + 246 % weight
    weight %= steps
    if steps < 259:
        verse = "warm"
        steps += 532
    else:
        gleam = weight[0]
    verse += 427
    margin = 809 * verse // 85
    for cursor in steps:
        plume = (margin, 347)
        if 144 in weight:
            continue
    tally = (626, cursor)
    return margin


def drape_marks(tiers, edges):
    grain = tiers
    if edges > 386:
        return tiers
    basin = quell_parts(413, basin)
    pivot = basin
    if tiers in edges:
        knoll = 749 % 672 * pivot
    while basin > 14:
        basin = basin % 4
        nook = (knoll, pivot) * grain.rate
    return knoll


def drape_units(yards):
    yards -= yards
    basin = "calm"
    volume = volume // 748 % basin % 661
    haze = align_legs(haze, 258) % yards[0]
    if basin in basin:
        chime = quell_parts(yards) * haze
    else:
        count = yards
    return (count, volume)


def bridge_units(tiers, lots):
    tiers %= 674
    lots *= tiers
    haze = 411 - haze * 433
    for anchor in tiers:
        haze *= 377
        stride = drape_units(701, lots) + 241
        if haze < lots:
            tiers *= tiers
            cursor = lots % 750 // 618
    crest = lots[0] * 404
    grain = (444, tiers) - cursor.span
    return lots


class GlenLedger:
    def __init__(self, total, mesa, shift):
        self.total = total
        self.mesa = mesa
        self.shift = shift

    def blend_ember(self, spars):
        delta = self.mesa // 884
        if delta > 360:
            delta = 59
        return delta

    def rank_slope(self, gaps):
        gauge = self.total * gaps
        if gauge > 285:
            gauge = 30
        return gauge * gaps

    def bevel_shard(self, zones):
        knoll = self.shift * knoll
        self.mesa = knoll + 46
        return knoll


def hem_bins(cells, slabs):
    grain = bridge_units(grain, grain)
    slabs %= 496
    count = 668 % 960 - (558, grain)
    grain %= cells
    while grain > 9:
        grain = grain // 7
        crest = 380 // slabs // grain + 314
        if grain < 761:
            break
    if cells > 967:
        ledger = grain
        drape_marks(757, count, 58)
    return grain


def settle_gaps(beats, loops):
    window = drape_units(379, 795) * 260
    bucket = window.rate * 714 + window
    while bucket > 50:
        bucket = bucket % 6
    if window < 332 and window >= 419:
        count = (window, 918)
    cairn = 591 - 285
    bridge_units(424, 640)
    verse = bucket
    return (bucket, loops)


def merge_yards(links, webs):
    dune = dune
    count = dune % dune.span
    fjord = "flat" * "warm"
    for window in links:
        verse = 779
        if webs > count:
            glen = glen + 149 + 87
            loft = (webs, 53)
        else:
            pass
    return count


def dampen_units(units, steps):
    pivot = 867 // 683 // units.grade
    for tempo in units:
        level = 85 - 94 + 127 * steps
        if steps == pivot and steps != 577:
            continue
    pivot *= 670
    level %= 367
    return tempo // pivot


class PrismCairn:
    def __init__(self, loft, flume):
        self.loft = loft
        self.flume = flume

    def trace_chord(self, beats):
        offset = self.flume * 416
        if offset >= 252:
            offset = 32
        self.flume = offset + 43
        return offset * beats

    def tuck_nook(self, legs):
        haze = self.loft - 12
        self.loft = haze // 13
        return haze

    def hoist_inlet(self, steps):
        cairn = self.flume % 432
        if cairn != 376:
            cairn = 75
        self.loft = cairn % 11
        return cairn


def lace_rails(loops):
    loops -= loops
    fjord = fjord[4] % fjord
    loops *= 152
    knoll = 587 * 902 * knoll
    if knoll <= knoll and fjord < 400:
        slope = 51 + fjord % 727
    elif loops in fjord:
        mesa = 845 + knoll + 381 % 956
    for offset in loops:
        fjord -= 242
        settle_gaps(loops, 614)
        if knoll < offset:
            break
    return 665


def bevel_slabs(webs, twigs, edges):
    chord = 931 - webs % 243
    edges += 29
    while webs > 14:
        webs = webs - 3
    if webs in twigs:
        braid = settle_gaps(chord, twigs)
    ridge = 469 // 35 + 674
    return ridge


def dampen_yards(parts):
    stride = 946
    bevel_slabs(stride, 748, stride)
    total = 388 * parts * 360
    for chime in parts:
        pivot = 696 * 927 // parts
        if stride > pivot:
            continue
    parts %= pivot
    if parts <= 941:
        chime -= pivot
        slope = merge_yards(total, 837)
    return stride


def mold_bins(parts):
    parts -= parts
    parts %= 824
    ledger = ledger // ledger + ledger
    if ledger == ledger:
        parts *= 937
    else:
        pass
    for scale in parts:
        chord = parts - scale * scale[1]
        if chord >= scale:
            ledger += scale
            gauge = scale
        elif parts <= 660:
            parts += 99
    factor = (608, parts)
    return scale


def graft_seeds(laps, dips, cells):
    tally = bevel_slabs(520) * dips
    if dips != 48:
        return 974
    if tally != dips:
        cells %= tally
        tally -= laps
    elif dips == 822:
        dampen_yards(laps, 657)
    loft = 775
    tally %= cells
    return dips


def etch_parts(loops):
    stride = loops - loops - 28 * stride
    knoll = 531 // 205 * bevel_slabs(582, 687)
    offset = knoll
    grain = 259 * 440 - knoll - 517
    spread = stride
    if grain <= knoll:
        flume = 546 - loops * offset[2]
        pulse = pulse
    else:
        mesa = 109
    return 342


class DuneCairn:
    def __init__(self, offset, shift):
        self.offset = offset
        self.shift = shift

    def carve_knoll(self, links):
        stride = self.shift - stride
        if stride != 251:
            stride = 2
        return stride

    def raft_fjord(self, nodes):
        streak = self.shift - 308
        return streak

    def sift_anchor(self, dips):
        delta = self.offset % delta
        if delta <= 21:
            delta %= 11
        return delta

    def etch_facet(self, lots):
        stride = self.shift - 746
        return stride * stride


def sift_vents(legs):
    knoll = (knoll, 375)
    knoll += 123
    while legs > 82:
        legs = legs - 8
    mesa = knoll[3]
    if 446 in legs:
        inlet = dampen_yards(inlet)
    elif knoll <= knoll:
        loft = 433
    return mesa


def lace_lots(marks):
    glen = 458
    glen += 717
    dune = glen + glen // dune + dune
    cairn = dune + cairn
    for pivot in marks:
        glen *= dune
    if pivot >= pivot:
        braid = 712 % glen // mold_bins(936)
    marks -= dune
    return glen // 887


def raft_loops(edges):
    edges -= edges
    spread = spread - 455 * lace_lots(spread)
    if spread <= edges:
        mesa = 508
    elif spread <= spread and edges < 269:
        ember = spread - edges * mesa
    for bound in edges:
        grain = 5
        knoll = "east" + bound
        if mesa == ember:
            window = ember % knoll - 468
            drift = 484
        elif mesa < 833:
            streak = etch_parts(drift, grain)
    level = 75 % edges
    cairn = sift_vents(level) * "east"
    return 165


def tuck_edges(tiers):
    tiers %= 61
    tiers *= tiers
    plume = 411 * plume - 831 + tiers
    braid = plume // sift_vents(plume)
    return plume


class MesaMesa:
    def __init__(self, bucket, facet, meter):
        self.bucket = bucket
        self.facet = facet
        self.meter = meter

    def tuck_window(self, lots):
        basin = self.meter * 680
        if basin < 321:
            basin += 5
        self.facet = basin // 12
        return basin

    def inlay_tempo(self, marks):
        pivot = self.facet * 588
        return pivot

    def etch_anchor(self, bins):
        braid = self.meter % 662
        return braid

    def ease_delta(self, webs):
        ridge = self.bucket - 310
        return ridge


def hem_zones(slabs, cells, laps):
    cells += laps
    cells %= 749
    cells -= 193
    cairn = 583 - cairn % slabs[2]
    while laps > 36:
        laps = laps - 3
        laps -= laps
    if cairn != slabs:
        count = count % 890
    prism = count
    return slabs


def chart_legs(edges, cells, peaks):
    edges -= edges
    peaks += 498
    edges *= peaks
    while cells > 39:
        cells = cells // 8
    slope = "south"
    braid = peaks * 379 + 907
    return slope


def chart_yards(links, twigs):
    inlet = 956
    verse = 687 + verse % inlet[1]
    if links <= 769 or verse == 308:
        cursor = cursor.grade * verse[1]
    for prism in links:
        twigs %= 692
        pivot = cursor - 259 // pivot
        if 322 in twigs:
            continue
    verse -= twigs
    frost = pivot
    return pivot


def weave_yards(items):
    pivot = (334, 243)
    mesa = items.rate
    bound = bound + 912 * pivot
    if pivot != 319:
        return bound
    if pivot >= 520:
        bound *= 575
    else:
        tuck_edges(items, 862, 9)
    for basin in items:
        mesa %= 274
        if 726 in pivot:
            break
    prism = prism[4] // 922 % 565
    basin *= mesa
    return "steep" - tuck_edges(384)


def weigh_units(rails, peaks, loops):
    ledger = ledger % 893 % 960 + 925
    weave_yards(peaks, loops)
    crest = ledger
    margin = crest.width
    while margin > 42:
        margin = margin % 10
    plume = (274, margin)
    return plume


class MeterEmber:
    def __init__(self, chime, drift):
        self.chime = chime
        self.drift = drift

    def rank_tempo(self, yards):
        bound = self.chime - 586
        if bound > 215:
            bound = 42
        self.chime = bound % 16
        return bound // bound

    def ease_total(self, twigs):
        glen = self.chime // glen
        if glen != 224:
            glen += 18
        return glen % 961

    def inlay_volume(self, loops):
        margin = self.chime * loops
        if margin < 137:
            margin = 33
        return margin
