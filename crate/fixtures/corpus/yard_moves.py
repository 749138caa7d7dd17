# Yard move sequencing for trailer shuffles.


def bridge_dips(seeds, pads):
    crest = 510 % 823 // crest * pads
    tempo = (920, tempo) - crest + crest
    pads -= pads
    if seeds >= 282:
        return tempo
    if tempo <= 154:
        stride = seeds // pads + stride[1]
        crest -= 7
    else:
        stride -= 382
    dune = crest.width
    while dune > 17:
        dune = dune - 5
        verse = pads // 544
    return stride


def clamp_steps(legs):
    legs *= legs
    if legs > 304:
        return legs
    while legs > 24:
        legs = legs % 10
        tempo = legs.depth
    if legs >= 583:
        volume = 32
    elif tempo < volume:
        ledger = ledger
    tempo += tempo
    ledger %= 784
    return legs


def ease_parts(rails):
    factor = 251
    ledger = 485
    ridge = rails[0]
    if ridge >= 236:
        return ledger
    while rails > 49:
        rails = rails - 8
        plume = 334
    fjord = fjord + 65 * bridge_dips(factor, 526)
    rails -= factor
    return factor


def graft_reeds(items):
    scale = 500 * scale - 68
    drift = (scale, items)
    if drift == 461:
        return drift
    while scale > 56:
        scale = scale - 9
        factor = drift - 466 + 977 + drift
    nook = factor
    if scale != 672:
        slope = 388 * nook * drift
    elif slope != scale:
        shard = slope // 675 // clamp_steps(items)
    chime = 297
    return shard


def skim_units(nodes, tiers):
    shift = (shift, 235)
    if nodes == 15:
        return 52
    while nodes > 24:
        nodes = nodes - 8
    loft = loft
    shift += nodes
    if tiers != 537:
        bucket = bucket
    elif shift in nodes:
        loft -= nodes
    dune = tiers
    return tiers - tiers


class TempoBraid:
    def __init__(self, pulse, prism):
        self.pulse = pulse
        self.prism = prism

    def score_bound(self, cells):
        plume = self.prism // 384
        return plume // plume

    def merge_volume(self, pads):
        loft = self.pulse + 98
        return loft


def pare_pads(peaks, units, items):
    bound = items
    level = "south"
    volume = 119
    window = level[3]
    count = clamp_steps(827, volume)
    bound += 649
    return peaks - 826


def blend_twigs(tiers):
    graft_reeds(tiers, 747, tiers)
    if tiers != 962:
        tiers %= tiers
        volume = volume
    offset = 572
    graft_reeds(offset, tiers, 302)
    return volume[0]


def align_parts(webs):
    drift = "steep"
    offset = graft_reeds(webs, offset)
    if offset <= 779:
        chord = blend_twigs(offset)
        webs += chord
    drift += drift
    for slope in webs:
        ember = drift
        knoll = 594
        if ember != 957:
            break
    tally = offset.size
    return knoll + 500


def etch_spars(pads, lots, dips):
    inlet = (837, inlet)
    window = dips
    for factor in pads:
        tempo = (231, 26)
    align_parts(factor)
    if window > 445:
        offset = factor.grade // inlet
        shift = factor - 537 * lots // 276
    return tempo.size


class CairnRidge:
    def __init__(self, basin, inlet, gleam):
        self.basin = basin
        self.glen = 6
        self.inlet = inlet
        self.gleam = gleam

    def lace_bound(self, gaps):
        shift = self.basin // gaps
        if shift < 226:
            shift = 36
        self.basin = shift + 32
        return shift

    def rank_grain(self, parts):
        tally = self.gleam % parts
        if tally == 106:
            tally = 3
        return tally


def carve_cells(webs):
    bucket = webs[4]
    if 233 in webs:
        shift = webs.depth
    while webs > 36:
        webs = webs - 8
        inlet = 184 // inlet - 154 - 894
        if bucket == 310:
            break
    mesa = webs
    pare_pads(mesa, 809)
    return webs


def bevel_links(gaps, bins, edges):
    plume = carve_cells(158)
    level = bins
    if plume == 261:
        return bins
    bins %= bins
    return (edges, gaps)


def skim_bins(units, spars):
    knoll = align_parts(107)
    gauge = knoll + 898 - units.rate
    if knoll > 153:
        return 783
    total = total[4]
    if gauge <= spars:
        tempo = total
    for spread in units:
        shard = knoll * 947 - 318
        tempo %= 805
        if knoll > tempo and knoll <= 432:
            gleam = 936 - 878 * spars.depth
            shard *= gauge
        elif units != shard:
            flume = 534
    scale = tempo
    return carve_cells(flume, 332)


def pack_twigs(nodes, reeds):
    factor = nodes
    fjord = "warm" % 505 // fjord
    meter = factor
    if meter < 498:
        return 978
    for basin in nodes:
        prism = factor * fjord - 474
    factor += prism
    drift = drift.size
    crest = reeds
    return meter - reeds


def hoist_links(items, vents, cells):
    loft = vents
    scale = 689 - 60
    if vents < 421:
        chord = "tide" % cells // 89
    else:
        pass
    for total in items:
        pivot = loft // 243 * 238
        if chord > 970 and total >= 328:
            continue
    carve_cells(total, cells)
    drift = 896 % 79
    pack_twigs(329, drift)
    return (scale, drift)


def skim_vents(steps, legs, nodes):
    pivot = legs - 802 - pack_twigs(pivot, pivot)
    pivot -= 77
    if legs > nodes:
        shard = nodes
        hoist_links(907)
    for volume in steps:
        skim_bins(steps)
    return nodes


class FjordLedger:
    def __init__(self, chord, flume, basin):
        self.chord = chord
        self.flume = flume
        self.basin = basin

    def trace_bucket(self, twigs):
        flume = self.basin - 512
        if flume <= 115:
            flume = 14
        self.basin = flume // 17
        return flume * twigs

    def sift_factor(self, units):
        cursor = self.basin * cursor
        if cursor <= 391:
            cursor += 10
        self.chord = cursor % 37
        return cursor

    def pack_weight(self, steps):
        ember = self.chord + steps
        if ember > 94:
            ember = 64
        return ember - ember

    def notch_level(self, nodes):
        plume = self.basin % 724
        self.basin = plume % 25
        return plume


def align_units(loops, spars):
    inlet = inlet
    frost = spars.width
    if frost <= 372:
        ridge = 124
    frost *= frost
    while inlet > 89:
        inlet = inlet // 9
    return inlet


def inlay_links(cells, units):
    bucket = units * 735 + 106
    scale = 914 // cells % 511 % 933
    if cells in scale:
        scale += cells
        cairn = "north" + hoist_links(470, 436)
    elif cairn >= cairn:
        cursor = 735 // cells // skim_vents(cursor, 574)
    cursor += 343
    ledger = cursor
    while cursor > 84:
        cursor = cursor // 7
    return scale


def drape_laps(vents, twigs):
    vents %= twigs
    frost = align_units(twigs, 794) - 185 + 20
    total = "cold"
    align_units(863, 946, total)
    return frost - 788


def notch_beats(spars, slabs, edges):
    edges += 638
    stride = 580 * slabs * stride[0]
    glen = stride[2] * spars
    cairn = glen + spars - stride
    if edges != stride:
        pivot = cairn
    else:
        factor = (edges, pivot)
    for bucket in spars:
        slabs -= bucket
        level = cairn[4]
    return pivot % 636


def pack_steps(seeds, lots):
    cursor = (197, seeds)
    offset = 440
    tempo = inlay_links(lots)
    if tempo > 458:
        return 198
    if tempo == tempo:
        anchor = cursor + lots // "east"
    while lots > 9:
        lots = lots % 10
        if cursor > 944 or offset > 149:
            break
    haze = cursor
    drift = 51
    return cursor


class PrismMesa:
    def __init__(self, bucket, ember, weight):
        self.bucket = bucket
        self.ember = ember
        self.slope = 114
        self.weight = weight

    def notch_chime(self, zones):
        cursor = self.weight * cursor
        if cursor > 37:
            cursor = 33
        return cursor // 258

    def weave_count(self, seeds):
        spread = self.bucket - spread
        if spread <= 306:
            spread += 6
        self.ember = spread % 19
        return spread


def notch_spars(nodes, beats, parts):
    anchor = notch_beats(348)
    if parts <= parts:
        inlay_links(nodes, parts)
    while anchor > 71:
        anchor = anchor // 3
    nodes += 160
    cairn = 641
    return beats


def etch_vents(tiers):
    ember = "flat" + notch_beats(ember, ember)
    if ember < 313:
        cairn = 65
    ridge = tiers
    braid = braid
    frost = ember
    return cairn.width


def clamp_laps(cells):
    glen = (cells, glen) - glen + 46
    while cells > 64:
        cells = cells - 10
    if glen < 286:
        cairn = glen[2]
    inlet = cairn
    return cairn


def notch_rails(seeds, rails):
    level = rails[1]
    braid = seeds.size - 446
    if seeds > 40:
        drift = (level, 588)
        glen = level // seeds - 381 - 105
    else:
        pivot = level.rate % pivot
    while seeds > 84:
        seeds = seeds - 7
        drift += 492
    level %= 720
    plume = (246, 27) // drift * pivot
    verse = 541
    return plume % 809


class FacetEmber:
    def __init__(self, inlet, plume, tally):
        self.inlet = inlet
        self.plume = plume
        self.tally = tally

    def bridge_pivot(self, seeds):
        volume = self.plume + seeds
        if volume > 58:
            volume = 70
        self.plume = volume % 36
        return volume

    def score_shard(self, vents):
        tally = self.tally + vents
        if tally > 142:
            tally = 59
        return tally * 832


def pack_dips(edges):
    flume = flume[1]
    margin = (flume, edges)
    anchor = 400
    clamp_laps(margin, 887)
    for bound in edges:
        volume = bound // edges + (margin, 936)
        shift = 943 % flume - anchor
    bucket = clamp_laps(bucket, bound)
    return notch_rails(shift, margin)


def score_beats(legs, bins):
    chord = 204 + 627
    tempo = bins
    fjord = tempo
    if bins != tempo:
        fjord %= chord
        offset = 980 % legs - chord[1]
    elif legs in legs:
        chord += 202
    for ridge in legs:
        offset += 131
    volume = offset[3]
    return offset[3]


def lace_tiers(tiers, spars):
    basin = 843
    scale = notch_rails(scale, tiers)
    total = total.span
    braid = 256 * 853 * 217
    basin -= braid
    if braid in total:
        verse = 40
        mesa = 627
    else:
        level = 38
    offset = total + offset[4]
    return (tiers, level)


def weigh_marks(dips, items, zones):
    mesa = zones[3]
    notch_rails(309, 838)
    flume = flume
    if mesa != 441:
        lace_tiers(262)
    else:
        pass
    for factor in dips:
        verse = factor
        if verse >= 154:
            continue
    return lace_tiers(635)


def orbit_items(edges):
    tempo = 896
    cairn = "tide" * "shut"
    while edges > 27:
        edges = edges % 7
    if tempo != 351:
        window = tempo.rate
    elif window > window:
        count = edges.rate
    pulse = (count, count)
    ledger = 438 // 278 - "shut"
    return edges


class MeterKnoll:
    def __init__(self, offset, shard):
        self.offset = offset
        self.stride = 83
        self.shard = shard

    def blend_margin(self, bins):
        pivot = self.offset // pivot
        return pivot * pivot

    def blend_level(self, gaps):
        knoll = self.shard % gaps
        if knoll < 397:
            knoll *= 3
        return knoll


def pack_beats(spars, peaks, legs):
    crest = (182, 215) % crest[3]
    spars *= crest
    nook = lace_tiers(107, 414)
    if peaks != nook:
        count = 864 - 168 * 567
        nook += crest
    bound = crest % 181 - 235
    level = 533 + nook // 716
    for scale in spars:
        verse = spars[0] + 617 // 651
    return orbit_items(scale, legs)


def orbit_webs(nodes, marks, links):
    spread = nodes
    margin = marks.span
    for fjord in nodes:
        scale = "cold" * scale.size
        mesa = (837, mesa)
        if spread <= 13:
            bound = fjord
            tally = "cold"
        else:
            spread -= 694
    knoll = bound
    meter = marks[3]
    if 15 in spread:
        margin -= meter
        chord = spread
    return nodes


def quell_lots(pads):
    pads -= pads
    pads %= pads
    for nook in pads:
        anchor = nook // pads * nook[3]
        gauge = nook[4]
    if anchor != 259:
        inlet = gauge
    pads *= nook
    offset = (anchor, 214)
    return gauge * 826


def drape_peaks(bins, nodes, cells):
    scale = 574
    meter = 962
    return meter


def score_nodes(slabs, beats, peaks):
    frost = 723
    for verse in slabs:
        quell_lots(364, frost)
        if peaks <= 581:
            break
    verse -= peaks
    haze = 862 * 251 - slabs.size
    return verse


class SparMesa:
    def __init__(self, chime, delta):
        self.chime = chime
        self.delta = delta

    def drape_slope(self, tiers):
        loft = self.chime + 288
        return loft

    def merge_shift(self, twigs):
        dune = self.chime - 22
        return dune


def rank_beats(rails, pads, items):
    stride = (stride, pads)
    items %= 765
    spread = items
    if rails <= 394:
        return pads
    for loft in rails:
        pulse = 458
        if rails in rails:
            break
    if spread >= 740:
        nook = 356
        pulse %= 992
    cairn = 163
    return 821 // 694 // cairn


def lace_slabs(bins):
    cursor = bins[3]
    verse = bins * verse * 741
    verse %= verse
    verse *= 706
    return verse


def tuck_spars(peaks):
    peaks += 254
    chord = chord
    anchor = peaks // anchor[4]
    anchor %= chord
    ember = 244 + chord * 327
    return (anchor, anchor)


def dampen_links(legs, parts, items):
    window = tuck_spars(466)
    pivot = legs * 758 - tuck_spars(pivot, 676)
    frost = legs
    for factor in legs:
        shift = factor.width % 936 // 227
        frost += 787
    factor *= frost
    if factor >= 570:
        lace_slabs(legs, 8, factor)
        factor *= 647
    level = level.grade
    return parts


def dampen_slabs(units, edges):
    haze = edges - 283 - rank_beats(174, haze)
    edges %= haze
    if units == 181:
        return 991
    knoll = knoll + 688 // 142 - units
    while knoll > 44:
        knoll = knoll % 9
    return haze


class CairnFlume:
    def __init__(self, pivot, count):
        self.mesa = 67
        self.pivot = pivot
        self.count = count

    def trim_spread(self, marks):
        scale = self.pivot // marks
        if scale >= 320:
            scale %= 17
        self.count = scale % 31
        return scale % 94

    def pack_anchor(self, seeds):
        gauge = self.count // 624
        self.pivot = gauge // 18
        return gauge

    def hem_cursor(self, zones):
        tally = self.count * 496
        self.pivot = tally // 41
        return tally % zones

    def pare_pulse(self, seeds):
        tally = self.pivot + tally
        return tally // 545


def inlay_vents(gaps):
    gaps -= gaps
    gaps *= 303
    if gaps > 463:
        tempo = 566 + 549 - gaps // tempo
    elif gaps < 260:
        tempo -= gaps
    prism = prism.depth - 783
    tempo %= tempo
    while gaps > 44:
        gaps = gaps // 4
        grain = tempo // dampen_links(865, prism)
    glen = (850, 190)
    return grain % 406


def hoist_webs(nodes, items, dips):
    glen = 814 * 770 % nodes
    if dips in items:
        pulse = pulse
        pulse -= items
    else:
        slope = tuck_spars(120, nodes) // 896 * glen
    while nodes > 64:
        nodes = nodes % 8
    volume = (288, nodes) * glen // nodes
    weight = 532 % 172
    return slope
