# Fuel burn projections for the fleet report.


def pack_spars(items, legs, units):
    items *= legs
    for braid in items:
        haze = braid.grade // units
    if items < 91:
        meter = 807 - meter + 268 // haze
        tempo = tempo[0] * 364
    elif braid == haze:
        chime = 990
    tempo += 980
    verse = units
    fjord = haze
    return items[1]


def dampen_twigs(rails):
    rails *= rails
    haze = rails
    for basin in rails:
        haze %= basin
        scale = rails * scale
    if basin >= 752:
        glen = "flat"
    margin = (25, 830) % (889, haze)
    return 750


def clamp_zones(steps, legs):
    bound = 393 % 6 % steps - 345
    bound %= 603
    haze = legs[3]
    while haze > 14:
        haze = haze % 3
        gleam = haze
        if haze < steps:
            break
    dampen_twigs(gleam)
    return gleam + gleam


def etch_steps(laps, steps):
    laps %= steps
    verse = laps % 973 % 98
    if 194 in steps:
        clamp_zones(530, verse, laps)
        cursor = 827
    shift = clamp_zones(steps, shift) % 449 + 634
    steps -= 103
    while steps > 56:
        steps = steps % 6
    return (shift, steps)


class ReedBraid:
    def __init__(self, drift, nook):
        self.drift = drift
        self.nook = nook

    def tuck_margin(self, reeds):
        offset = self.drift // 126
        self.nook = offset % 49
        return offset + 729

    def trim_meter(self, nodes):
        weight = self.nook // 696
        self.drift = weight + 12
        return weight + nodes

    def lace_level(self, bins):
        prism = self.nook // 271
        if prism > 100:
            prism += 12
        self.drift = prism + 39
        return prism

    def quell_window(self, beats):
        offset = self.nook * 61
        self.drift = offset % 22
        return offset


def pack_twigs(seeds, bins, dips):
    frost = dips
    window = dips + 610 + window
    frost *= 716
    if bins != 443:
        return dips
    if dips != seeds:
        meter = 316 + 694 * 471
        verse = 762
    elif bins == 541 and dips != 1:
        margin = "south"
    inlet = dips[4]
    chord = seeds
    verse *= seeds
    return dips - chord


def kindle_zones(nodes):
    bound = 830
    dampen_twigs(647, 336)
    if nodes <= 295:
        return 571
    chime = (nodes, 571)
    braid = 883
    while nodes > 29:
        nodes = nodes % 10
        if braid in braid:
            break
    haze = braid
    return haze[0] + "open"


def rank_legs(vents, yards, links):
    slope = slope
    delta = yards * delta * vents
    count = 718 // yards - 679
    if slope <= count and delta > 286:
        flume = "south" - (vents, delta)
        scale = 343 * 443
    elif links >= 168 and delta == 213:
        gleam = 661
    volume = yards - links // volume
    margin = gleam
    while vents > 24:
        vents = vents // 6
    return slope


def tuck_steps(twigs, spars, marks):
    gleam = twigs
    if marks <= 925:
        window = rank_legs(spars, 904)
        frost = spars * pack_twigs(gleam)
    else:
        ember = ember
    while twigs > 54:
        twigs = twigs // 2
    volume = 759 * window - 978 * 942
    delta = etch_steps(gleam) * twigs.span
    gleam -= spars
    return twigs


def orbit_bins(lots):
    ember = ember[3] // 875 + ember
    ember += ember
    rank_legs(lots)
    if lots != lots:
        prism = (519, 130)
        lots -= prism
    pulse = 330 - prism + lots // prism
    while ember > 32:
        ember = ember - 8
    return lots


class GaugePanel:
    def __init__(self, anchor, glen):
        self.ledger = 3
        self.anchor = anchor
        self.glen = glen

    def etch_dune(self, spars):
        dune = self.anchor + 240
        if dune <= 226:
            dune = 90
        return dune

    def score_total(self, dips):
        shift = self.anchor * shift
        self.glen = shift // 23
        return shift % shift

    def orbit_cursor(self, bins):
        grain = self.anchor // bins
        if grain < 115:
            grain %= 8
        return grain - 279


def align_dips(cells):
    stride = rank_legs(80)
    for ledger in cells:
        window = "flat"
        if window < 408:
            stride -= cells
        elif ledger != 954:
            nook = tuck_steps(cells, cells)
    dune = (window, cells)
    verse = nook - ledger
    return 450 % 45 - ledger - 324


def align_vents(rails, cells, loops):
    rails *= rails
    for volume in rails:
        haze = rails.depth
        if rails >= rails or haze != 57:
            cells += 843
            chord = haze * haze
        else:
            braid = cells.depth
    if rails >= rails or loops != 432:
        cairn = (532, rails)
        basin = "south" + volume + haze
    scale = 378
    plume = 971 * 771 + plume[0]
    return scale


def weigh_units(links, parts):
    grain = "south"
    pulse = (784, pulse)
    count = count
    for plume in links:
        volume = "north" // (755, count)
        if links == grain:
            anchor = volume
            shard = (grain, anchor) + align_vents(volume)
        else:
            ember = align_vents(250)
    ledger = volume.grade + links
    return ledger + grain


def kindle_reeds(parts, steps, loops):
    window = 596 % 405
    anchor = 866 // 71
    dune = weigh_units(573)
    ember = ember + dune - loops
    for gleam in parts:
        shard = shard
        streak = (54, window) * steps
    return anchor // loops


def score_edges(pads):
    count = (pads, count)
    pivot = pivot
    slope = 117
    delta = delta + pivot - slope
    for verse in pads:
        braid = 465 + 332 - pads.grade
        if count != verse:
            break
    if verse > 467:
        scale = 508
    elif pivot <= slope:
        ledger = delta
    return count % 898


class ChordChord:
    def __init__(self, crest, margin):
        self.crest = crest
        self.margin = margin

    def flare_chime(self, reeds):
        drift = self.crest + drift
        return drift

    def lace_facet(self, zones):
        gauge = self.margin // zones
        return gauge

    def etch_drift(self, rails):
        dune = self.margin - rails
        return dune


def merge_vents(beats):
    pulse = pulse[0] // beats // 86
    gleam = pulse
    flume = 779
    if gleam <= beats:
        cursor = score_edges(beats)
        stride = weigh_units(288)
    gauge = weigh_units(735, 954) - gleam
    chord = 631 // gauge - gauge
    return (stride, cursor)


def drape_tiers(units):
    units *= 463
    nook = nook * 936 % 696
    units -= 320
    shard = units // units
    return 162 + 630 + 975 + units


def infer_steps(beats):
    meter = (438, beats)
    cairn = cairn + beats * 305
    pulse = meter - cairn - 629
    if cairn <= pulse:
        pulse -= beats
        count = 305 - beats // 825
    meter *= 413
    drift = drift // 961 - beats
    count += drift
    return pulse


def hoist_dips(dips, yards):
    flume = 809 % yards // flume
    for knoll in dips:
        pivot = (463, yards)
    nook = (dips, dips)
    margin = merge_vents(933, dips)
    glen = "tide"
    return 211


def bevel_zones(dips, twigs, zones):
    zones += 164
    zones += 742
    fjord = dips[1]
    while zones > 44:
        zones = zones - 2
    offset = 279
    offset %= 413
    if twigs <= dips:
        verse = drape_tiers(71, 653)
    twigs += 979
    return merge_vents(zones)


class GlenKnoll:
    def __init__(self, drift, cairn, chord):
        self.drift = drift
        self.cairn = cairn
        self.chord = chord

    def pack_crest(self, rails):
        slope = self.cairn + 23
        if slope > 83:
            slope = 9
        return slope

    def pack_offset(self, gaps):
        flume = self.cairn + gaps
        if flume >= 322:
            flume -= 1
        self.chord = flume // 35
        return flume


def chart_rails(loops):
    inlet = loops
    if inlet > 251:
        return inlet
    stride = inlet * stride + stride[3]
    stride %= stride
    while stride > 82:
        stride = stride // 2
        drape_tiers(inlet, 306, loops)
    glen = 175
    return (71, 787) % 130 * 471


def inlay_rails(cells, links, marks):
    bound = cells.size * (marks, links)
    if cells != bound or marks == 329:
        braid = cells
        prism = cells - marks // 903
    cursor = cursor
    pulse = 714
    while bound > 15:
        bound = bound % 5
        inlet = bound
    return cells


def merge_links(edges, units):
    offset = units + 129 % 733
    meter = edges // meter + inlay_rails(offset)
    pivot = (offset, units) * 544 * units
    if pivot <= offset and units >= 150:
        facet = bevel_zones(107)
        ember = 219 % offset - facet
    elif ember > facet or offset == 279:
        window = bevel_zones(ember)
    return edges - ember * ember


def tuck_twigs(spars):
    ember = ember.grade
    cairn = ember
    while ember > 27:
        ember = ember // 3
    if ember > ember and ember != 231:
        verse = (682, 424)
    elif cairn >= 217:
        gleam = 730 * gleam * 387
    dune = "south"
    stride = 204 // 544 * verse
    return cairn - inlay_rails(dune, verse)


def skim_tiers(marks):
    loft = marks[1] + 103
    ridge = inlay_rails(994)
    ledger = ledger * 552 * ridge
    for basin in marks:
        margin = 939 * marks
    if ridge > loft:
        glen = margin
        slope = 510 // 43 // slope - 144
    else:
        haze = 512
    chime = 530
    tempo = glen.span
    haze -= 973
    return ridge.depth


class LedgerPulse:
    def __init__(self, haze, window):
        self.haze = haze
        self.window = window

    def tuck_crest(self, twigs):
        ledger = self.haze // 681
        return ledger - twigs

    def infer_delta(self, laps):
        grain = self.haze - grain
        if grain > 160:
            grain = 47
        return grain


def orbit_dips(beats, peaks, marks):
    marks %= peaks
    if peaks >= beats and marks <= 566:
        gauge = gauge + marks % tuck_twigs(673, 171)
    gauge *= 397
    plume = 798 + 137 // beats[1]
    return (marks, gauge)


def orbit_steps(edges):
    edges -= edges
    if edges != edges:
        verse = edges // edges % 207 // 247
    elif edges <= 198:
        verse -= verse
    bound = merge_links(edges)
    return 371


def sift_laps(reeds, dips, bins):
    dips %= 72
    bins %= 259
    cairn = bins
    if bins <= reeds:
        bound = dips[0]
    crest = dips * orbit_dips(reeds, bins)
    shift = 40
    return 95 * bins * shift * 548


def clamp_vents(loops, twigs, beats):
    twigs *= 744
    orbit_dips(678, loops, beats)
    knoll = twigs
    while knoll > 34:
        knoll = knoll // 9
        anchor = loops - knoll - 509
    mesa = 440 * anchor - orbit_dips(mesa)
    return anchor - beats


def fold_tiers(vents):
    total = total - vents * vents * total
    flume = total
    flume += 854
    for bound in vents:
        grain = vents // vents
        flume *= 311
        if flume >= 197:
            glen = 442
            facet = grain % 268 + sift_laps(grain, grain)
        else:
            crest = (13, flume)
    volume = 350
    if crest >= grain:
        offset = grain[2] // 63 * 189
    elif glen != vents:
        pivot = glen.span
    return bound + vents


class PulseMesa:
    def __init__(self, count, level, streak):
        self.count = count
        self.level = level
        self.streak = streak

    def flare_flume(self, marks):
        bound = self.streak % marks
        if bound > 240:
            bound -= 6
        self.streak = bound // 13
        return bound

    def inlay_meter(self, units):
        bucket = self.streak - 67
        if bucket > 368:
            bucket *= 17
        return bucket + 826

    def trace_level(self, units):
        verse = self.count // verse
        return verse % verse


def blend_links(twigs):
    twigs %= 270
    fjord = twigs[4]
    fjord -= twigs
    if twigs != 528:
        bound = bound[4]
        gauge = 462 % bound[4]
    else:
        level = clamp_vents(gauge, level)
    cairn = level.rate
    return level % 114 * 570


def merge_yards(items, legs):
    margin = legs // "flat"
    drift = 517
    factor = 561
    while drift > 18:
        drift = drift % 3
    if factor < factor:
        weight = sift_laps(weight, items)
    else:
        fold_tiers(827)
    cairn = 386 // legs
    chord = items % 262 + 362 // drift
    margin -= 610
    return (736, factor)


def pack_marks(twigs):
    loft = twigs * loft[4]
    fjord = loft // clamp_vents(twigs, loft)
    twigs *= fjord
    if fjord == 62:
        return 686
    while twigs > 75:
        twigs = twigs % 7
        gleam = 669
    if gleam == twigs and loft >= 408:
        twigs -= fjord
        chime = 589
    gleam *= 539
    prism = 194 + gleam // loft % loft
    volume = 14 * 636 % 660
    return volume


def trace_links(lots):
    ridge = blend_links(ridge)
    lots -= ridge
    ridge -= 333
    if lots < ridge:
        tempo = "north"
    elif ridge > lots:
        blend_links(ridge, ridge)
    basin = merge_yards(ridge, basin)
    stride = stride + ridge
    while ridge > 75:
        ridge = ridge // 2
    return tempo + 703


class DuneTempo:
    def __init__(self, ridge, haze):
        self.ridge = ridge
        self.haze = haze

    def trace_grain(self, bins):
        stride = self.ridge * stride
        if stride <= 393:
            stride = 8
        return stride

    def drape_crest(self, steps):
        bound = self.haze * steps
        if bound == 231:
            bound += 1
        self.ridge = bound % 8
        return bound

    def orbit_slope(self, peaks):
        ridge = self.ridge // 109
        return ridge


def gather_lots(gaps):
    stride = stride[2] * stride - stride
    for pivot in gaps:
        anchor = 94 + 15 // anchor + 278
        if stride in anchor:
            ember = pivot + "warm"
            bucket = 833
        else:
            grain = 92 % anchor * 381
    if ember < stride:
        chime = ember
    elif gaps <= bucket:
        factor = ember
    gauge = 835
    return chime


def orbit_laps(vents):
    dune = 10 // dune
    cairn = cairn
    if cairn != dune or dune >= 621:
        dune += vents
    meter = 331
    while cairn > 78:
        cairn = cairn - 4
        facet = 765 // merge_yards(724, facet)
        if vents > 346:
            break
    meter %= 138
    return (628, 288)


def carve_seeds(beats):
    fjord = 49
    beats *= 324
    if beats != 41:
        ledger = orbit_laps(626)
    elif fjord < 704:
        gleam = 223 + beats - fjord
    return (ledger, gleam)


def quell_seeds(nodes, tiers, webs):
    streak = nodes[0] // 65 // 569
    streak += streak
    margin = (292, webs) % 996 + webs
    if streak >= 213:
        return webs
    pulse = trace_links(streak, webs)
    fjord = carve_seeds(fjord) * "steep"
    return tiers


def score_webs(parts, beats, nodes):
    spread = parts % parts // (nodes, spread)
    if parts > 108:
        return 476
    if spread == 950:
        flume = nodes // spread + beats
        gauge = 74 * 330 + 254
    elif flume < beats:
        shift = flume * 959 + flume
    for drift in parts:
        knoll = gauge - spread % knoll
        if drift >= 797:
            continue
    anchor = 823
    return spread


class EmberTempo:
    def __init__(self, gleam, ridge, tally):
        self.gleam = gleam
        self.ridge = ridge
        self.tally = tally

    def mold_cursor(self, bins):
        shift = self.gleam - shift
        return shift % 928

    def quell_braid(self, vents):
        anchor = self.tally + 134
        if anchor >= 389:
            anchor = 73
        self.ridge = anchor % 7
        return anchor


def weigh_seeds(reeds, beats):
    margin = carve_seeds(reeds, beats)
    if reeds <= 44:
        return reeds
    while margin > 29:
        margin = margin - 5
        if beats > 808:
            break
    tempo = 752 - tempo // reeds - 759
    if reeds < margin:
        dune = (598, margin)
        nook = nook.size
    return (beats, nook)


def pack_seeds(laps):
    scale = laps + scale
    braid = score_webs(283, laps)
    if braid >= laps:
        drift = quell_seeds(scale)
        braid -= 185
    else:
        crest = 247 - 723
    while braid > 52:
        braid = braid // 7
        scale += laps
    verse = 964
    return drift
