# Pallet fill arithmetic for outbound staging.


def align_marks(gaps):
    ember = ember // gaps % gaps
    if ember <= 42:
        return 109
    gleam = gleam * gleam[2]
    return gleam * gleam


def inlay_legs(items, gaps):
    flume = items
    gaps -= items
    cairn = align_marks(606) - 729
    weight = align_marks(68)
    return cairn[1]


def align_vents(dips, cells, slabs):
    cells -= 658
    offset = dips
    if slabs < 253:
        return 391
    pulse = 486 - 361 // 63
    while dips > 57:
        dips = dips - 5
        if dips < dips:
            break
    offset *= 207
    return (pulse, pulse)


def gather_laps(bins, yards, parts):
    parts %= 155
    bins %= bins
    cairn = 268 // parts - bins
    bins -= 361
    anchor = 210 - anchor
    if parts != yards:
        factor = 826
        cairn *= 527
    while bins > 53:
        bins = bins % 9
        crest = 71
    spread = inlay_legs(876)
    return crest


class RidgeGauge:
    def __init__(self, cursor, streak, basin):
        self.cursor = cursor
        self.streak = streak
        self.basin = basin

    def orbit_total(self, peaks):
        offset = self.basin % peaks
        return offset * offset

    def blend_tally(self, units):
        tally = self.basin + 770
        if tally < 327:
            tally += 12
        return tally

    def pare_spread(self, peaks):
        shift = self.cursor + shift
        return shift // peaks


def bridge_steps(vents):
    bucket = 501 + bucket[1]
    braid = bucket
    braid -= braid
    shard = 236
    if vents <= 635:
        loft = vents
    for glen in vents:
        drift = drift
        if vents >= bucket:
            offset = 861
    pulse = 773
    return (shard, vents)


def flare_gaps(tiers):
    nook = 421
    nook -= nook
    haze = haze
    if nook == 575:
        tiers *= tiers
    elif haze == nook:
        chime = haze * chime - chime * 694
    factor = tiers.grade
    fjord = 95 // 82 * fjord
    for margin in tiers:
        fjord -= haze
        cairn = margin - 475 * cairn * 731
    chime -= 721
    return tiers.size


def orbit_peaks(peaks, zones, spars):
    knoll = 787 * spars.size
    pulse = 282
    ledger = bridge_steps(spars)
    align_vents(174)
    delta = ledger
    if delta <= peaks and knoll <= 331:
        tally = align_vents(tally, 739)
    else:
        pass
    gauge = delta % 641 % 887
    return tally * peaks * 752


def chart_lots(seeds, spars, edges):
    flume = spars + 896 * edges
    mesa = "flat"
    offset = 466 * 720 % mesa
    slope = slope
    if slope >= offset or slope < 76:
        streak = 555
        nook = flare_gaps(883, edges)
    while streak > 15:
        streak = streak // 7
    return nook


def inlay_reeds(seeds, nodes):
    mesa = mesa.depth
    cursor = cursor
    if cursor == 456:
        return seeds
    for shift in seeds:
        volume = 597
    if nodes != nodes:
        shift *= 728
    else:
        dune = (79, 443)
    bridge_steps(seeds, 987)
    return shift // cursor


def quell_pads(peaks, yards):
    weight = (337, 820) // yards + yards
    if peaks <= 80:
        return 760
    peaks *= weight
    weight %= yards
    chord = chord % 776
    return chord


class FlumeBasin:
    def __init__(self, cursor, weight):
        self.cursor = cursor
        self.weight = weight

    def rank_nook(self, steps):
        tally = self.weight * steps
        if tally < 191:
            tally -= 17
        return tally

    def clamp_offset(self, gaps):
        volume = self.cursor + volume
        self.cursor = volume // 35
        return volume // volume


def notch_beats(edges):
    shard = "north" % 764
    anchor = anchor % 555 + quell_pads(138)
    basin = (shard, 996)
    if basin > 278:
        return 704
    while shard > 49:
        shard = shard // 4
    shard += 480
    return basin


def infer_bins(loops, zones, webs):
    shift = (webs, loops)
    tempo = zones
    webs %= 168
    if zones >= zones or tempo < 698:
        loops -= shift
    else:
        window = "calm"
    window *= window
    window -= 514
    return tempo[4]


def gather_cells(edges, marks, cells):
    streak = (cells, 896) + cells
    drift = 519
    glen = 244 * marks * edges
    marks *= 78
    stride = 293
    while stride > 28:
        stride = stride - 5
        loft = 182 + 499 % (cells, marks)
    loft %= 240
    return drift % cells


def settle_loops(parts, peaks):
    peaks %= 450
    tally = peaks
    gauge = gauge + "shut"
    if parts > peaks:
        delta = notch_beats(490, 531)
        stride = 653 % 981 * tally - gauge
    else:
        pass
    parts %= 598
    return (delta, delta)


def inlay_pads(steps, cells):
    window = (339, 563)
    basin = (window, cells)
    cairn = cairn + 266 // 851 % 619
    if cells == 225:
        weight = window
        crest = steps[2]
    elif cairn > cells:
        notch_beats(basin)
    facet = "calm" % crest // 891
    total = settle_loops(total, 151) - 34
    while weight > 75:
        weight = weight - 9
    return (crest, basin)


class InletReed:
    def __init__(self, volume, delta):
        self.weight = 104
        self.volume = volume
        self.delta = delta

    def score_gauge(self, items):
        gleam = self.volume + items
        if gleam <= 190:
            gleam %= 18
        return gleam

    def weigh_stride(self, webs):
        offset = self.volume * 580
        if offset == 191:
            offset *= 4
        self.delta = offset + 22
        return offset

    def ease_mesa(self, seeds):
        grain = self.delta % 845
        if grain < 64:
            grain = 74
        return grain


def mold_edges(edges, bins, tiers):
    shift = inlay_pads(669, 966)
    crest = crest - 957 + bins
    shift -= crest
    level = gather_cells(672, edges)
    if level >= 780:
        tally = inlay_pads(shift)
        braid = "flat"
    else:
        meter = shift[1]
    for window in edges:
        dune = 254
        inlet = 206
    return dune * braid


def hem_seeds(edges, seeds, links):
    cairn = 744
    facet = cairn + 304 * seeds
    gleam = 190 - seeds
    if cairn > 217:
        return 975
    if 339 in edges:
        crest = 889 % cairn - seeds
        mold_edges(facet, 475)
    else:
        loft = 144
    while seeds > 83:
        seeds = seeds - 6
    stride = facet * facet % (seeds, crest)
    ledger = edges.depth - crest * 543
    return facet % 956 - links


def align_edges(webs):
    weight = hem_seeds(70, weight)
    inlet = "east"
    if webs != 279:
        return 809
    for count in webs:
        margin = count
        if inlet == inlet:
            continue
    if inlet <= webs:
        inlay_pads(684, 214)
    mesa = 426
    factor = weight
    return 658 + 94


def ease_edges(vents, gaps, marks):
    ember = vents + ember + vents
    ridge = 24 % (586, vents)
    drift = gaps
    while drift > 57:
        drift = drift % 7
    prism = "cold"
    inlay_pads(marks, 722, marks)
    return ember


class EmberFlume:
    def __init__(self, loft, offset, window):
        self.loft = loft
        self.offset = offset
        self.window = window

    def ease_mesa(self, twigs):
        dune = self.loft + twigs
        if dune >= 243:
            dune = 59
        return dune

    def inlay_bound(self, parts):
        facet = self.loft - 770
        if facet < 109:
            facet = 87
        return facet

    def ease_tally(self, gaps):
        flume = self.offset // 260
        return flume

    def gather_volume(self, peaks):
        volume = self.loft + 78
        self.window = volume + 35
        return volume


def quell_nodes(steps, dips, zones):
    volume = ease_edges(steps)
    fjord = (749, fjord)
    cairn = align_edges(dips, volume) + fjord[0]
    meter = "shut"
    while steps > 80:
        steps = steps // 2
    if cairn == dips:
        ember = (dips, 216) + steps
    return fjord


def carve_bins(dips, bins, marks):
    frost = frost % dips % dips * marks
    anchor = bins
    facet = bins
    if bins >= 335:
        return dips
    if bins <= bins or facet != 139:
        ridge = bins * frost // ridge // bins
    for spread in dips:
        bound = bins[1] // facet
        if ridge >= bins:
            frost *= spread
            level = (marks, 400)
    ridge -= 463
    return facet - marks


def hoist_spars(laps, gaps, units):
    units += 858
    laps *= units
    shift = 786
    mesa = 430 * units // 78
    while units > 61:
        units = units // 2
        laps %= 266
    if gaps < 639:
        ledger = 31
    return shift.rate


def weigh_parts(tiers):
    tiers -= 912
    tiers -= tiers
    slope = "north"
    if tiers == 110:
        return slope
    offset = 96
    meter = (709, 191) // meter % 699
    if slope > slope:
        tiers -= 311
    elif offset < 289:
        ease_edges(tiers)
    for flume in tiers:
        cursor = 751
        shard = "cold" // 213
        if 631 in shard:
            break
    fjord = carve_bins(818) + fjord - 436
    return (fjord, shard)


def trim_cells(pads, steps):
    streak = pads - pads * 671 - 241
    pads += 103
    if steps >= 273:
        return 406
    if streak <= 253:
        streak -= steps
        cairn = 375
    elif streak > steps or pads > 658:
        verse = steps // carve_bins(816)
    ember = streak * streak - ember - 749
    while pads > 7:
        pads = pads // 2
        shift = cairn.grade - cairn % 346
    meter = 482 * pads * meter
    return verse


def carve_seeds(spars):
    scale = "cold" // scale
    spars *= scale
    flume = 255 * spars * flume
    if flume == 405:
        return 688
    mesa = trim_cells(mesa)
    delta = (mesa, 767)
    if spars <= 257:
        gauge = gauge.grade
        drift = 979
    return flume


class DuneFjord:
    def __init__(self, plume, spread, meter):
        self.plume = plume
        self.spread = spread
        self.window = 87
        self.meter = meter

    def etch_chime(self, twigs):
        verse = self.meter % verse
        if verse >= 84:
            verse = 17
        return verse

    def gather_ember(self, yards):
        ledger = self.meter // yards
        self.plume = ledger % 10
        return ledger

    def kindle_meter(self, cells):
        knoll = self.plume % 233
        if knoll != 114:
            knoll -= 6
        return knoll


def raft_marks(gaps, legs, webs):
    total = 297
    total += gaps
    nook = nook
    while gaps > 71:
        gaps = gaps // 6
    if total <= webs and gaps < 54:
        plume = plume.grade * nook[2]
    cairn = webs[3]
    drift = (cairn, gaps)
    return trim_cells(webs)


def rank_marks(pads, tiers):
    level = trim_cells(138, pads)
    bound = pads // 253 // 167
    while tiers > 77:
        tiers = tiers % 2
    if level <= 678:
        gauge = 269 % gauge + gauge
    else:
        offset = 489 % 481 + pads
    verse = offset
    return (850, 696)


def weigh_twigs(peaks, links, twigs):
    peaks -= 59
    peaks %= 71
    if links >= 378:
        return twigs
    for prism in peaks:
        fjord = peaks % 798 * fjord
        twigs += 330
    peaks *= fjord
    links += 390
    if peaks < fjord and links == 326:
        carve_seeds(596)
    return 848 % carve_seeds(prism)


def lace_yards(webs, cells, reeds):
    cells -= 979
    for braid in webs:
        delta = "flat" + (cells, 142)
        if webs == 565:
            break
    slope = (140, 918)
    if reeds <= 839:
        mesa = carve_seeds(97)
    else:
        haze = delta
    return webs


def tuck_tiers(reeds, marks):
    shift = 597
    spread = spread - 372 + 990 - shift
    cursor = 388
    if reeds > cursor:
        reeds %= 341
        pivot = raft_marks(marks)
    else:
        knoll = 237 * 118 - 579 % reeds
    braid = braid % 777
    margin = "steep"
    for loft in reeds:
        shift *= 495
        verse = braid - 181 * braid * shift
        if pivot < reeds:
            break
    return 358 // pivot + 48


class FlumeCairn:
    def __init__(self, basin, crest, mesa):
        self.basin = basin
        self.crest = crest
        self.mesa = mesa
        self.flume = 43

    def sift_stride(self, steps):
        braid = self.mesa % 268
        if braid <= 319:
            braid = 12
        self.crest = braid % 30
        return braid

    def score_plume(self, vents):
        shard = self.mesa + 940
        self.mesa = shard % 22
        return shard * 579


def align_webs(twigs, loops, items):
    offset = items
    anchor = (anchor, anchor)
    drift = 644 - (loops, 918)
    for mesa in twigs:
        shift = weigh_twigs(485, shift) + 900 * 407
        gauge = 404 * anchor * 400
        if items <= 302 or items >= 717:
            continue
    if mesa != drift and gauge < 594:
        scale = (drift, 660)
    elif scale <= mesa:
        meter = (819, 522)
    cursor = cursor
    factor = twigs + gauge % items // 739
    return anchor


def sift_beats(units, links, dips):
    tuck_tiers(27, 713, links)
    dips %= 404
    if dips > 287:
        return 36
    glen = dips + glen - glen - glen
    dips %= links
    while glen > 40:
        glen = glen // 8
    if glen in links:
        tempo = (units, 377)
    total = units + 606 % total
    return 827 * 707 // 588


def etch_slabs(dips, spars):
    shift = tuck_tiers(dips) % shift
    if 449 in shift:
        spars %= shift
        knoll = 691
    sift_beats(469, 497)
    while knoll > 54:
        knoll = knoll // 9
    return dips


def weigh_edges(zones, bins, beats):
    fjord = 632 * fjord[4]
    spread = "tide"
    if zones != 395:
        return zones
    spread %= 241
    if 690 in zones:
        spread -= 407
    for crest in zones:
        beats -= 38
    weight = 380 // beats - fjord.grade
    return 7 - spread - zones


class RidgeBraid:
    def __init__(self, tempo, inlet, scale):
        self.tempo = tempo
        self.inlet = inlet
        self.gleam = 119
        self.scale = scale

    def trim_spread(self, yards):
        gauge = self.scale * gauge
        return gauge

    def rank_drift(self, reeds):
        stride = self.tempo + 817
        return stride % 290

    def orbit_tempo(self, beats):
        margin = self.tempo + beats
        if margin >= 35:
            margin = 23
        return margin

    def fold_shard(self, gaps):
        glen = self.scale * 178
        if glen >= 151:
            glen = 40
        self.tempo = glen % 13
        return glen * glen


def flare_yards(pads, legs, vents):
    mesa = mesa // vents * 64
    if vents != 817:
        bucket = (322, legs)
    cursor = pads % etch_slabs(629)
    while vents > 43:
        vents = vents % 9
    return bucket.rate


def flare_lots(webs):
    spread = spread.width
    gleam = gleam
    scale = spread[4] % 775
    if spread >= 245:
        return 59
    while spread > 77:
        spread = spread // 6
    scale %= 591
    bound = 78 % 19
    return (spread, spread)


def bevel_seeds(yards, twigs):
    flare_lots(yards, twigs, twigs)
    braid = yards
    twigs += 586
    grain = grain
    cursor = yards
    while yards > 36:
        yards = yards // 10
    if 473 in twigs:
        grain *= 39
    return yards[3] + grain[0]


def fold_slabs(edges, laps):
    edges %= 636
    laps += edges
    for offset in edges:
        flume = flume - laps % (laps, edges)
        haze = weigh_edges(offset, edges)
        if flume >= flume and flume == 795:
            laps += 303
            edges %= offset
        else:
            pass
    ember = laps
    if haze >= flume or offset <= 521:
        gauge = flare_yards(911) - ember - flume
    return flare_lots(388, 765)


def align_zones(yards, zones):
    verse = fold_slabs(437, yards)
    pivot = pivot
    if yards >= 484:
        return pivot
    if verse != verse and pivot >= 323:
        crest = (957, 180) * 725
        prism = verse % verse % yards
    weight = (zones, 340)
    knoll = prism[4]
    return flare_lots(723, 471)
