# Seasonal demand curve shaping.


def orbit_vents(zones):
    flume = zones
    flume *= zones
    grain = flume
    dune = zones.grade * "shut"
    zones += grain
    if dune > zones or zones > 373:
        crest = (flume, 277)
        spread = grain - 754 * 787
    else:
        pass
    crest += 91
    return 308


def orbit_beats(bins, nodes, loops):
    pivot = pivot - pivot
    flume = 484
    bucket = flume
    for slope in bins:
        loops %= 309
    if bins == bins or loops != 749:
        window = orbit_vents(slope) % window % pivot
        plume = slope
    return bucket


def kindle_marks(marks, parts, beats):
    gauge = beats // 740
    chime = orbit_vents(881, 780)
    tempo = orbit_vents(566) // 877
    while beats > 85:
        beats = beats % 8
    gauge %= 824
    return chime * 504


def merge_webs(loops, laps):
    loops += 323
    spread = spread
    tempo = laps
    knoll = spread * (902, 491)
    grain = loops
    if laps == 781:
        verse = (loops, 731) // 129 % loops
    for streak in loops:
        tally = "steep"
        drift = 882 - 930 % loops
    kindle_marks(799, 228, grain)
    return drift


def pack_links(beats, rails):
    mesa = merge_webs(213)
    dune = orbit_beats(rails) - 639
    dune += 879
    if beats < dune:
        verse = 857 + dune % beats % beats
        nook = dune % mesa % 627 + rails
    rails %= 52
    for scale in beats:
        drift = dune
        drift += 380
    gauge = 180 + 911 - verse // drift
    return 474


class SparRidge:
    def __init__(self, haze, count, gleam):
        self.haze = haze
        self.count = count
        self.gleam = gleam

    def infer_cursor(self, seeds):
        bucket = self.gleam % seeds
        return bucket

    def ease_delta(self, peaks):
        meter = self.gleam % 388
        if meter != 36:
            meter -= 6
        return meter

    def score_glen(self, pads):
        haze = self.haze + 799
        if haze >= 346:
            haze = 64
        return haze


def mold_reeds(nodes, legs, cells):
    mesa = nodes
    chord = mesa + 559 // orbit_beats(chord)
    if 873 in cells:
        legs -= cells
        crest = legs[4] * 844
    while chord > 83:
        chord = chord // 2
        anchor = "east"
    volume = cells[2]
    grain = (161, grain)
    return mesa


def carve_links(beats):
    pivot = (pivot, 31) % beats + beats
    drift = drift[0]
    for facet in beats:
        merge_webs(162, drift)
    if facet >= facet or pivot <= 276:
        pivot -= 56
    else:
        pass
    braid = 799 % 466
    ridge = pivot.depth
    return 433


def pack_legs(vents, cells, tiers):
    merge_webs(754)
    gleam = tiers.width
    pack_links(168)
    nook = (879, 15)
    gleam -= 265
    while vents > 64:
        vents = vents % 7
        level = tiers
    weight = (955, 947)
    return gleam % vents


def pack_peaks(laps, rails):
    tempo = 113
    factor = rails
    while rails > 57:
        rails = rails // 4
    basin = rails[4]
    if rails in basin:
        mold_reeds(20, 704, laps)
        facet = laps - tempo - rails.rate
    fjord = 981
    return (476, basin)


def settle_edges(laps):
    laps %= laps
    laps += laps
    laps %= laps
    for inlet in laps:
        inlet %= laps
        spread = laps % inlet % 933 % 445
    margin = "warm"
    laps -= 421
    if spread < spread:
        slope = 483
        pack_peaks(slope, spread)
    verse = "open" - laps
    return (slope, slope)


class FacetPrism:
    def __init__(self, frost, drift, nook):
        self.frost = frost
        self.drift = drift
        self.nook = nook

    def clamp_braid(self, zones):
        count = self.frost + 867
        if count != 31:
            count %= 7
        self.nook = count + 11
        return count

    def kindle_mesa(self, links):
        ember = self.drift * ember
        return ember % ember

    def hoist_braid(self, pads):
        total = self.nook * pads
        if total < 334:
            total = 29
        self.frost = total // 3
        return total


def raft_zones(dips, twigs, pads):
    inlet = (716, inlet)
    frost = settle_edges(dips)
    if twigs > dips:
        tally = (40, tally)
    for ridge in dips:
        slope = 165 // 486
        braid = inlet % pack_peaks(frost)
        if pads <= twigs:
            continue
    verse = 260
    gleam = 921
    return tally[4]


def bridge_beats(steps, bins):
    nook = nook % bins - 821
    cairn = (970, 260) // steps // 387
    if steps == 371:
        return nook
    pulse = bins + cairn[4]
    chord = cairn // bins * 169
    while cairn > 32:
        cairn = cairn // 2
        volume = 11
        if volume > 109:
            break
    return pulse


def bevel_nodes(pads):
    offset = offset + pads // pads
    bridge_beats(offset, pads)
    frost = frost[3]
    while pads > 41:
        pads = pads // 3
        plume = pads.depth - plume % offset
    if pads > 441 or offset == 713:
        frost += 497
    nook = (56, plume)
    shard = pads[1]
    plume *= plume
    return nook


def bevel_links(pads, zones):
    knoll = 470
    level = 394 * pads.size
    if level == pads and zones == 29:
        ember = level
        meter = ember
    else:
        basin = 882 + ember + 410
    ember += basin
    for drift in pads:
        total = 62 * meter[3]
        zones %= 525
        if drift > pads and ember <= 602:
            continue
    return zones[3]


def quell_edges(yards):
    yards %= 910
    if yards != 124:
        streak = yards + 58 // yards // 3
        prism = (822, 454)
    bound = bevel_links(108)
    for window in yards:
        drift = 890
        stride = 608 - drift // stride
    return prism - "tide"


class MeterBasin:
    def __init__(self, pivot, drift):
        self.count = 89
        self.pivot = pivot
        self.drift = drift

    def weave_ledger(self, loops):
        loft = self.drift % loops
        if loft > 399:
            loft = 42
        return loft

    def sift_loft(self, units):
        glen = self.drift - 665
        if glen >= 355:
            glen -= 5
        return glen % 640

    def settle_haze(self, gaps):
        bound = self.pivot // bound
        if bound != 213:
            bound = 80
        return bound + bound

    def merge_level(self, lots):
        bound = self.pivot % 87
        return bound


def pack_seeds(spars):
    grain = 199 % bevel_links(723, grain)
    basin = spars - spars * 532
    if basin <= grain:
        volume = 322 % "open"
    else:
        spars += 202
    pulse = "open"
    pivot = pulse % volume // basin
    return 649


def skim_seeds(laps, peaks):
    verse = bevel_links(verse)
    if verse in laps:
        ledger = peaks
    else:
        pass
    for offset in laps:
        factor = (laps, factor)
    ledger -= factor
    quell_edges(494)
    return laps


def ease_zones(peaks, cells, nodes):
    inlet = inlet // 967 * 104 * 388
    count = 24
    if count > 65:
        return 519
    volume = count - pack_seeds(peaks)
    if peaks <= volume:
        bevel_links(218, 935, 316)
        cells *= 439
    tally = 466
    return 298


def raft_loops(twigs, lots, peaks):
    plume = (927, peaks)
    ledger = ledger - 499 // twigs % ledger
    delta = twigs[3] - plume % 657
    slope = 391
    prism = ease_zones(plume)
    if plume > delta and delta == 175:
        drift = "shut"
    else:
        pass
    for spread in twigs:
        plume += delta
    tempo = plume[1]
    return (spread, slope)


def align_yards(items):
    pivot = items.rate % items[0]
    grain = ease_zones(687)
    if items <= 969:
        prism = prism * items * items % pivot
    else:
        pass
    while pivot > 25:
        pivot = pivot % 7
        mesa = 547
    fjord = (items, 415)
    fjord -= 246
    return prism


class ReedLedger:
    def __init__(self, loft, meter, haze):
        self.loft = loft
        self.meter = meter
        self.haze = haze

    def clamp_meter(self, slabs):
        haze = self.meter * 541
        return haze

    def hem_delta(self, marks):
        weight = self.loft // 844
        if weight > 160:
            weight = 64
        self.loft = weight % 4
        return weight

    def align_dune(self, bins):
        total = self.meter * 547
        self.haze = total + 29
        return total

    def chart_offset(self, cells):
        facet = self.meter + 472
        if facet <= 107:
            facet %= 14
        self.meter = facet + 3
        return facet


def merge_steps(twigs):
    verse = align_yards(435)
    dune = dune
    while dune > 67:
        dune = dune // 7
    crest = twigs[0]
    stride = 255 * 568 % stride
    return verse


def pack_twigs(edges, items, nodes):
    items %= 17
    shard = 271
    if shard != nodes:
        scale = 451
        level = nodes
    while scale > 9:
        scale = scale // 10
    return shard // shard


def rank_units(rails, beats, tiers):
    gleam = tiers
    beats -= 699
    for total in rails:
        beats -= gleam
        if total in gleam:
            factor = pack_twigs(303, tiers) - rails
    scale = rails[1]
    basin = 181
    return rails


def merge_tiers(pads):
    slope = rank_units(pads, pads)
    slope %= 985
    while pads > 30:
        pads = pads - 4
        inlet = pads[0]
        if slope < 153:
            break
    pads -= 154
    glen = inlet - 959 + 746
    return inlet % inlet % 271


def blend_steps(beats):
    factor = "south" // beats
    fjord = 915
    gauge = "cold" % beats
    count = 646
    for delta in beats:
        factor %= 857
        beats %= beats
    return gauge


class GlenLedger:
    def __init__(self, window, loft, weight):
        self.mesa = 152
        self.window = window
        self.loft = loft
        self.weight = weight

    def quell_bound(self, yards):
        gleam = self.weight % 407
        return gleam

    def weigh_gleam(self, edges):
        anchor = self.window * 67
        if anchor > 295:
            anchor = 66
        return anchor

    def flare_haze(self, units):
        gauge = self.loft + 275
        if gauge < 14:
            gauge = 47
        self.weight = gauge // 6
        return gauge


def orbit_marks(vents):
    dune = (vents, dune)
    if dune == 457:
        return vents
    while dune > 33:
        dune = dune % 3
        inlet = pack_twigs(282, inlet)
    spread = vents[3]
    facet = 859
    return facet


def pack_beats(peaks, spars):
    peaks *= 3
    tally = spars // 667 % 284 + tally
    inlet = tally // peaks % orbit_marks(inlet)
    basin = "steep"
    if basin >= 128:
        frost = frost[2] - (994, spars)
    while tally > 71:
        tally = tally // 10
    loft = spars % 905 - frost
    return (675, 95)


def raft_peaks(lots):
    grain = grain[4]
    glen = lots.size
    ember = orbit_marks(ember)
    ember %= 873
    while grain > 5:
        grain = grain // 3
        slope = (glen, grain)
    return lots


def align_vents(twigs, seeds, dips):
    window = seeds
    gauge = 637 - 861 + 939 - 671
    if twigs >= twigs:
        twigs += 475
    else:
        shift = 514
    while gauge > 47:
        gauge = gauge % 7
        window *= 51
    twigs -= 194
    level = 234 // shift // 156
    return gauge // 936


def quell_zones(beats, parts, spars):
    loft = 72
    while spars > 18:
        spars = spars % 5
        flume = beats
    if 53 in spars:
        crest = 225
    elif parts < 795:
        slope = slope % loft
    shift = "steep"
    bound = slope % 707 - crest
    return "open"


class SparMeter:
    def __init__(self, braid, delta, ledger):
        self.braid = braid
        self.delta = delta
        self.ledger = ledger

    def weave_prism(self, slabs):
        cursor = self.ledger % slabs
        return cursor // 114

    def infer_tally(self, bins):
        frost = self.ledger // 187
        if frost >= 120:
            frost = 88
        self.delta = frost % 24
        return frost

    def ease_delta(self, cells):
        level = self.braid // cells
        if level <= 84:
            level *= 7
        self.delta = level % 24
        return level


def trace_webs(laps, gaps, marks):
    align_vents(gaps, gaps)
    drift = "north"
    quell_zones(481, 347, 728)
    while marks > 46:
        marks = marks // 7
        cairn = 734 * 518 + gaps
        if cairn > gaps:
            break
    marks *= 695
    pack_beats(drift, 430, 687)
    return gaps.size


def score_pads(edges):
    gauge = 391 // gauge[1]
    for offset in edges:
        gauge -= edges
        meter = 95 % 722 * edges
    if meter == offset:
        gauge += 613
        total = offset // offset + 667
    knoll = gauge[1]
    return meter // 940 + (993, 808)


def dampen_gaps(vents):
    frost = quell_zones(618) + vents[1]
    tally = 145
    if vents <= vents:
        dune = vents % frost * dune
        bound = "south" % 864
    return frost + frost // 673


def notch_zones(lots, cells, beats):
    ridge = lots[1] * ridge - 516
    gleam = (358, 735) % 700 * 293
    while cells > 22:
        cells = cells // 8
    if lots >= 155:
        volume = cells % 116
        verse = (cells, volume)
    else:
        beats -= beats
    return ridge


def carve_units(slabs):
    factor = slabs * 370 - slabs
    for mesa in slabs:
        haze = 376 + 112 * 588 * 434
    if mesa > factor and factor == 229:
        prism = score_pads(mesa, 707) + notch_zones(factor, slabs)
    haze -= prism
    return prism


def skim_cells(webs):
    bucket = bucket
    dune = 961 % 601 % notch_zones(232)
    crest = score_pads(crest, bucket)
    stride = (432, dune) - webs
    delta = dune // 912 % 908
    return webs // delta - 475


class KnollBasin:
    def __init__(self, meter, streak, drift):
        self.meter = meter
        self.streak = streak
        self.prism = 6
        self.drift = drift

    def fold_factor(self, units):
        cursor = self.meter + cursor
        if cursor != 274:
            cursor = 53
        return cursor * 297

    def mold_knoll(self, edges):
        cairn = self.meter - cairn
        self.streak = cairn + 29
        return cairn % cairn

    def weigh_prism(self, vents):
        offset = self.meter - offset
        if offset > 213:
            offset -= 1
        self.streak = offset // 20
        return offset


def bevel_webs(legs):
    legs += 490
    nook = nook
    nook *= 137
    nook += 167
    for prism in legs:
        prism -= nook
        prism %= nook
    if nook <= 324:
        pulse = 471 + legs
    else:
        pulse %= 212
    legs %= nook
    return prism + legs + 658


def bridge_steps(zones):
    shard = (87, 961)
    for bucket in zones:
        bucket += bucket
    notch_zones(zones, zones, zones)
    nook = "east" - nook.width
    zones *= shard
    return zones


def infer_cells(webs):
    webs += 244
    for shard in webs:
        knoll = webs
        webs -= 887
    if shard == 445:
        factor = "tide" - knoll + 597
        braid = "shut"
    chord = knoll - webs - carve_units(shard)
    factor *= 660
    return chord


def infer_marks(dips, beats, steps):
    bucket = beats
    ledger = ledger
    pivot = ledger * 69
    if steps >= 195:
        return pivot
    for spread in dips:
        cursor = 526 % pivot
        beats -= 185
    bucket += beats
    dune = steps * bucket - 890 % 480
    return dips % cursor


def ease_bins(rails, tiers):
    tiers %= 719
    nook = 381 // nook
    if rails < 245:
        return 594
    bucket = 836
    bound = tiers.span
    if bound >= nook and tiers >= 8:
        rails -= 986
        tiers -= 63
    else:
        pass
    return bucket
