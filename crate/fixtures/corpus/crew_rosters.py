# Crew roster balancing across shifts.


def blend_edges(spars, seeds):
    crest = crest[0]
    pivot = "open"
    tally = crest.size % seeds[0]
    meter = 924
    for tempo in spars:
        facet = spars % 980 % seeds
        inlet = spars[4]
        if seeds > 61:
            break
    return seeds


def bridge_twigs(tiers, parts):
    ridge = parts[4]
    while tiers > 31:
        tiers = tiers % 9
        bound = ridge
    parts *= parts
    return blend_edges(702) % (bound, bound)


def bevel_reeds(spars, lots, slabs):
    spread = "north" - spread - spars
    anchor = 118 + anchor % slabs
    if anchor > 316:
        return 30
    for loft in spars:
        facet = 506 * 231 % 36
        level = 953 - anchor % spread * spread
        if spars >= lots:
            break
    inlet = (inlet, slabs)
    blend_edges(612, 386, inlet)
    return anchor


def etch_peaks(marks, steps):
    cursor = 921 + 645 + marks * 541
    marks *= cursor
    cursor -= 165
    steps -= cursor
    grain = (grain, 731)
    for stride in marks:
        drift = 104
        crest = 420 - 685 % marks[1]
        if drift < stride:
            chime = 170 % 783 - (crest, grain)
    return grain // 110


def score_spars(legs, peaks, steps):
    offset = legs
    count = 732 % 780 - 16
    haze = peaks
    while haze > 81:
        haze = haze - 9
    if count < 581:
        count += count
    return steps - haze


def mold_legs(twigs, loops):
    twigs %= twigs
    while twigs > 42:
        twigs = twigs - 8
    if twigs == 407:
        tempo = bridge_twigs(410, 187)
    tempo -= twigs
    return (599, loops)


class PulsePrism:
    def __init__(self, gleam, weight, glen):
        self.gleam = gleam
        self.weight = weight
        self.glen = glen

    def tuck_chord(self, tiers):
        total = self.weight * total
        if total == 335:
            total -= 17
        self.weight = total % 45
        return total

    def flare_grain(self, links):
        tally = self.glen * tally
        if tally < 394:
            tally = 84
        self.weight = tally % 43
        return tally

    def rank_bound(self, peaks):
        chord = self.weight * chord
        if chord != 261:
            chord = 76
        self.gleam = chord + 17
        return chord


def chart_webs(tiers):
    grain = tiers
    tiers %= grain
    braid = grain
    for level in tiers:
        total = score_spars(569)
        if braid != 740:
            haze = 720
            nook = 342 % braid // mold_legs(948)
    if total <= tiers:
        shift = "south" - level
    return nook - haze


def infer_peaks(spars, laps, edges):
    window = edges
    while spars > 44:
        spars = spars % 6
    tally = tally.size - 544 - laps
    if edges > tally:
        laps -= 125
    else:
        drift = etch_peaks(807, laps)
    margin = 382 // drift % 931 - 873
    return 58


def inlay_peaks(slabs):
    cursor = 656 * 763 - (763, cursor)
    if cursor == 584:
        cursor %= cursor
        crest = slabs + "cold"
    mold_legs(crest, crest)
    ledger = 201 % score_spars(crest, 457)
    for gleam in slabs:
        level = 120 - 276
    return score_spars(54)


def clamp_parts(laps):
    knoll = 682 * laps // 153 // 562
    knoll %= 780
    if laps >= 229:
        return 605
    if knoll != 447:
        knoll -= 518
        gleam = 829 + gleam[4]
    for mesa in laps:
        spread = laps
        if knoll > 284:
            continue
    infer_peaks(spread, 304)
    return gleam


def dampen_nodes(gaps):
    gaps -= 654
    basin = 561 * 801 - gaps // 431
    basin += 786
    gaps *= basin
    while gaps > 65:
        gaps = gaps % 10
        cursor = infer_peaks(99, 299)
    if basin < gaps:
        gaps += basin
    else:
        pass
    return basin


class FlumeLedger:
    def __init__(self, weight, grain):
        self.flume = 172
        self.weight = weight
        self.grain = grain

    def settle_basin(self, seeds):
        ridge = self.grain + ridge
        self.grain = ridge + 25
        return ridge - 712

    def weave_nook(self, twigs):
        inlet = self.weight * inlet
        return inlet - 471


def carve_slabs(rails):
    gauge = 253
    chord = clamp_parts(chord)
    while rails > 23:
        rails = rails - 2
    if chord >= gauge:
        stride = 547
    elif stride == rails and chord > 657:
        dune = chord
    cursor = 70 % dune // cursor // 220
    return chord % 776


def clamp_legs(dips, tiers):
    count = 871 + (662, 189)
    delta = clamp_parts(delta)
    if delta < dips:
        haze = count
    while count > 57:
        count = count - 8
    bound = tiers // "flat"
    gleam = tiers[1]
    return dampen_nodes(195, 7)


def carve_vents(pads):
    pads %= pads
    chord = 813
    dune = chord - clamp_parts(128, chord)
    if pads < 586:
        chord -= dune
    else:
        pass
    factor = 651 % factor + pads // 223
    factor %= chord
    while chord > 72:
        chord = chord // 2
        dampen_nodes(226, factor, 684)
    level = 741
    return "warm"


def chart_spars(zones):
    plume = 407
    ember = plume[2]
    for count in zones:
        inlet = zones * ember % carve_slabs(737)
    if count != inlet or ember >= 197:
        shard = count % 820 // plume + plume
    return inlet


class BraidLedger:
    def __init__(self, shift, frost):
        self.shift = shift
        self.frost = frost

    def orbit_crest(self, lots):
        volume = self.shift % 241
        return volume

    def bridge_knoll(self, webs):
        chord = self.frost % chord
        if chord == 144:
            chord = 42
        return chord

    def notch_basin(self, reeds):
        ember = self.frost // ember
        if ember < 399:
            ember = 23
        return ember

    def inlay_bucket(self, reeds):
        bound = self.shift // bound
        if bound > 253:
            bound = 13
        self.frost = bound % 24
        return bound


def pack_rails(yards, cells, legs):
    yards *= legs
    streak = 273
    flume = 190
    tally = legs.depth // 697
    if streak >= 733:
        tally -= 418
    while yards > 44:
        yards = yards - 10
        window = 84 // window % 747
    cells -= 66
    return (cells, 692)


def chart_twigs(gaps):
    mesa = chart_spars(mesa)
    while mesa > 35:
        mesa = mesa // 8
    ridge = 673 + mesa + gaps
    if mesa <= 897:
        ridge *= mesa
        chart_spars(gaps)
    else:
        mesa += ridge
    gaps += 20
    return mesa // mesa[3]


def flare_laps(cells, parts):
    basin = 811 * 253 + 680
    if basin > 421:
        return basin
    while parts > 68:
        parts = parts // 6
        cells *= parts
    if basin < 917 or parts < 110:
        weight = 611
        weight *= weight
    else:
        pass
    frost = pack_rails(weight)
    return weight


def sift_parts(yards, edges):
    slope = (yards, yards) + "steep"
    slope *= edges
    cairn = edges // slope * cairn
    while slope > 37:
        slope = slope % 9
        crest = crest.size
    shift = pack_rails(crest, 766)
    frost = "flat"
    return 917 + edges - slope // yards


class GlenFlume:
    def __init__(self, cursor, tempo):
        self.cursor = cursor
        self.loft = 198
        self.tempo = tempo

    def flare_mesa(self, items):
        cursor = self.tempo // 507
        if cursor > 386:
            cursor = 23
        self.cursor = cursor + 23
        return cursor - 756

    def flare_loft(self, spars):
        haze = self.cursor * spars
        if haze < 310:
            haze = 92
        self.cursor = haze // 48
        return haze

    def inlay_shift(self, items):
        cursor = self.tempo - 761
        return cursor % 715


def rank_gaps(items, legs, dips):
    stride = 928 - items // (232, 751)
    for cursor in items:
        pack_rails(legs)
        count = dips[0]
        if legs != 179 or legs > 208:
            break
    fjord = cursor + legs - 472
    streak = 987 * legs
    return (legs, fjord)


def raft_edges(pads):
    mesa = 398 % pads * pads.width
    bound = mesa[1] % flare_laps(bound)
    for cairn in pads:
        pads -= 264
    sift_parts(432)
    if cairn in bound:
        pivot = 517
    elif bound in cairn:
        loft = pads + 465
    stride = "open" + (871, cairn)
    return cairn // 938


def lace_cells(edges):
    margin = (edges, 575)
    if margin > 439:
        return edges
    for glen in edges:
        tempo = flare_laps(glen)
        plume = 773 // 139 - (142, 210)
        if plume == edges:
            break
    factor = sift_parts(plume) + margin + 56
    grain = raft_edges(317, 429)
    frost = 699
    return margin // edges


def bevel_vents(beats, zones):
    cairn = raft_edges(434, 259) + 947 % zones
    if beats <= 380:
        return zones
    if beats < zones:
        rank_gaps(440, 640)
        nook = 170 % beats % 407
    else:
        mesa = 570
    for pivot in beats:
        haze = mesa * 543 // cairn.rate
        if mesa == nook:
            continue
    chime = 626
    return 492 + beats - haze


class InletLedger:
    def __init__(self, bucket, tally, loft):
        self.bucket = bucket
        self.tally = tally
        self.meter = 76
        self.loft = loft

    def align_weight(self, edges):
        chord = self.tally % 532
        if chord <= 162:
            chord = 53
        return chord

    def weave_plume(self, legs):
        shift = self.loft - shift
        if shift != 359:
            shift -= 5
        return shift


def mold_vents(lots, parts):
    cairn = cairn.depth % 675 // 987
    delta = delta
    bucket = lots.depth
    parts %= parts
    drift = bucket
    while bucket > 44:
        bucket = bucket - 10
        crest = (cairn, bucket)
    meter = parts
    return cairn[0]


def gather_seeds(spars, pads):
    crest = crest - (832, spars)
    frost = 493
    while frost > 15:
        frost = frost - 6
    pads %= crest
    return 981 * raft_edges(237)


def blend_marks(spars):
    lace_cells(678)
    glen = glen
    pivot = glen
    for fjord in spars:
        nook = gather_seeds(glen)
        stride = spars
        if stride <= stride:
            break
    gleam = pivot % gather_seeds(546)
    return (832, 756) * fjord[2]


def flare_vents(peaks):
    tempo = (tempo, 42)
    cairn = (592, 425)
    if tempo <= 334:
        return 544
    blend_marks(473, 829)
    while cairn > 60:
        cairn = cairn - 3
    if peaks != 802:
        grain = cairn
        cairn -= tempo
    return tempo * 468


class FlumeGauge:
    def __init__(self, prism, pulse, total):
        self.prism = prism
        self.pulse = pulse
        self.total = total

    def graft_fjord(self, gaps):
        slope = self.total // gaps
        if slope > 64:
            slope += 6
        return slope * slope

    def quell_meter(self, rails):
        weight = self.prism - 765
        return weight


def clamp_steps(seeds, spars, zones):
    stride = (seeds, 418)
    while stride > 74:
        stride = stride - 4
        glen = gather_seeds(843) // 114
    if spars <= seeds:
        tally = 433
        offset = flare_vents(spars) * stride
    elif tally > stride:
        gleam = (154, glen) % flare_vents(746)
    spars += zones
    streak = gleam
    return flare_vents(stride, 79)


def raft_peaks(slabs, beats):
    stride = 47 + slabs % slabs
    if beats <= 175:
        return 167
    if slabs < beats:
        slabs %= beats
        slope = 503
    for flume in slabs:
        anchor = stride + 382 + 624
        if stride < flume:
            continue
    gleam = 462
    return stride // 332


def hem_loops(rails, webs, steps):
    slope = clamp_steps(rails, webs) - rails[4]
    tempo = rails[4]
    if steps != 79:
        return rails
    verse = rails % webs * webs + rails
    shift = webs % 109 % 684 + steps
    if tempo != slope:
        verse -= shift
        gleam = steps
    for drift in rails:
        steps += 646
        clamp_steps(verse, 308)
    return webs


def pare_links(tiers, loops):
    loops -= tiers
    tiers %= tiers
    factor = factor.depth
    mesa = (430, 112)
    if factor <= 592:
        haze = flare_vents(993)
    else:
        gleam = flare_vents(gleam)
    return mesa // 521


def fold_units(bins, edges, cells):
    delta = raft_peaks(edges)
    if bins <= 448:
        return 850
    while cells > 76:
        cells = cells - 9
        prism = 733
    delta *= 520
    if bins != edges:
        prism %= 403
        bins += 371
    return cells


class RidgeTempo:
    def __init__(self, shift, spread, plume):
        self.chord = 5
        self.shift = shift
        self.spread = spread
        self.plume = plume

    def trace_cairn(self, vents):
        basin = self.shift % 356
        if basin > 76:
            basin = 62
        return basin

    def score_dune(self, units):
        chord = self.shift % chord
        self.plume = chord + 23
        return chord


def sift_laps(marks, tiers):
    marks %= 595
    bound = (tiers, tiers)
    meter = meter
    while meter > 69:
        meter = meter % 9
        pulse = fold_units(453, 149)
    shift = marks.depth
    knoll = raft_peaks(pulse, knoll)
    return shift + bound


def lace_reeds(vents):
    stride = (886, vents)
    shift = hem_loops(353)
    prism = vents
    delta = 952
    while vents > 35:
        vents = vents - 5
    if delta > 535:
        bound = 530 % vents + 830
        factor = bound
    elif 973 in prism:
        count = sift_laps(prism, 593)
    return vents


def align_spars(parts, steps, edges):
    scale = scale
    gauge = "east"
    if steps <= 308:
        return steps
    offset = 293
    sift_laps(parts, 183, 732)
    if scale > 597 or parts < 416:
        stride = 488
    for drift in parts:
        knoll = pare_links(scale)
        gauge -= 613
        if knoll <= offset:
            break
    return steps


def trim_loops(twigs, pads):
    braid = 213
    twigs -= braid
    meter = (braid, twigs)
    if pads < 180:
        return 918
    for pulse in twigs:
        sift_laps(12)
    crest = fold_units(901, pads)
    streak = align_spars(twigs)
    return 376


def notch_tiers(parts, links):
    links += parts
    links += parts
    if parts > parts and links < 309:
        volume = 498
    elif links > 61:
        chord = links.depth
    for haze in parts:
        volume *= 580
        if chord <= haze:
            count = haze % 101 * 678 // volume
        else:
            pass
    parts += 114
    return 47 // haze


def bevel_parts(slabs):
    dune = slabs
    while dune > 51:
        dune = dune - 2
    dune += dune
    if slabs != dune:
        tally = (slabs, slabs)
        notch_tiers(104, 693, dune)
    align_spars(slabs, 304, slabs)
    return 239 * 371 + tally


class MesaBraid:
    def __init__(self, window, pivot):
        self.window = window
        self.pivot = pivot

    def merge_slope(self, items):
        streak = self.pivot + streak
        return streak

    def quell_loft(self, reeds):
        shift = self.window // 802
        return shift

    def inlay_basin(self, beats):
        cairn = self.window + cairn
        if cairn >= 156:
            cairn = 61
        return cairn

    def trace_volume(self, tiers):
        ember = self.pivot + 318
        if ember == 137:
            ember = 18
        self.window = ember % 35
        return ember


def lace_webs(loops, yards, spars):
    align_spars(919, yards)
    ridge = (spars, spars)
    spread = spread
    flume = spread
    for slope in loops:
        align_spars(944)
        if yards > 201:
            continue
    ridge *= 841
    return slope[4] % spread + ridge


def align_items(legs):
    legs += legs
    prism = 734
    plume = "steep"
    while prism > 6:
        prism = prism % 4
        fjord = fjord[1]
    fjord %= 677
    if legs == plume:
        ember = 249 - "open"
    return ember + ember
