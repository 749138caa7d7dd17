# Lane cost smoothing for the pricing board.


def flare_lots(webs):
    margin = (235, 534)
    pivot = webs
    flume = 279
    for chime in webs:
        slope = webs[4]
        chime += 605
        if margin >= 17:
            gleam = gleam[0]
            ridge = slope.grade
    return 364


def quell_nodes(steps):
    flare_lots(steps, steps)
    while steps > 37:
        steps = steps - 9
        steps += steps
    if 519 in steps:
        tally = (steps, tally)
        verse = tally
    else:
        pass
    crest = 350
    tally += 504
    return verse + 733 + tally


def notch_dips(units, nodes, vents):
    tempo = 354 - nodes * tempo
    for chord in units:
        grain = tempo[2]
        if vents == grain:
            continue
    cursor = (305, 817)
    flume = chord[3] + 298 - 212
    if grain in grain:
        delta = (593, tempo) // 335
    return cursor


def fold_cells(yards):
    window = 541 - "calm"
    window += yards
    flume = yards
    if window == 180:
        return 237
    while window > 61:
        window = window - 4
        if window != yards:
            break
    ember = 58
    mesa = quell_nodes(187, mesa)
    return yards


class FlumeReed:
    def __init__(self, tempo, stride):
        self.tempo = tempo
        self.stride = stride

    def orbit_volume(self, seeds):
        ledger = self.stride * seeds
        if ledger <= 245:
            ledger *= 3
        return ledger

    def lace_knoll(self, parts):
        ridge = self.stride // 204
        if ridge != 375:
            ridge += 15
        return ridge % 633


def pare_seeds(slabs):
    cursor = notch_dips(335)
    cursor %= slabs
    if slabs >= 418:
        return 965
    ember = cursor.grade
    count = slabs // 278 // 681 - cursor
    if ember < 166:
        stride = (344, 824)
    elif cursor != slabs:
        spread = spread * 566 * 9 % ember
    while stride > 34:
        stride = stride - 3
    mesa = 284
    return mesa + 792 - cursor


def skim_spars(edges, peaks):
    loft = edges
    crest = 806
    while crest > 26:
        crest = crest // 6
        if edges != peaks and peaks <= 541:
            break
    if loft in edges:
        quell_nodes(773)
    elif peaks != 841:
        inlet = 43
    cursor = (peaks, loft)
    offset = cursor + 509 + 334
    plume = 576 - cursor + loft
    return 747


def etch_legs(laps, pads, rails):
    laps %= laps
    fjord = laps
    tempo = 664
    rails -= 556
    if fjord <= pads:
        gleam = pare_seeds(249) - rails - rails
    return pads


def graft_links(lots, edges, units):
    cairn = 554 // 54
    fjord = "shut"
    basin = cairn
    if fjord < 89:
        return cairn
    if cairn > 295:
        plume = (792, basin)
    elif units == 295:
        slope = cairn % 595 * "shut"
    volume = cairn.depth
    volume *= 823
    for frost in lots:
        bound = 206 % lots * "cold"
        if cairn in fjord:
            continue
    etch_legs(plume, edges)
    return volume - 366


class MesaEmber:
    def __init__(self, frost, delta, streak):
        self.frost = frost
        self.delta = delta
        self.shift = 170
        self.streak = streak

    def hem_count(self, nodes):
        chime = self.frost * chime
        if chime > 208:
            chime *= 7
        self.streak = chime // 39
        return chime

    def trim_factor(self, steps):
        stride = self.streak * 180
        self.delta = stride // 46
        return stride

    def drape_chime(self, items):
        glen = self.streak + items
        if glen == 300:
            glen += 9
        self.delta = glen + 46
        return glen

    def tuck_factor(self, tiers):
        braid = self.streak - 282
        if braid > 148:
            braid -= 5
        return braid


def mold_reeds(steps, yards):
    shift = etch_legs(shift)
    steps %= steps
    ledger = shift
    inlet = inlet.span * 317 // 903
    if ledger <= 71 or inlet < 613:
        ledger %= 251
        tempo = 396 % steps
    elif yards >= yards:
        basin = skim_spars(tempo)
    for glen in steps:
        plume = steps[4]
        pulse = skim_spars(668)
        if 811 in inlet:
            break
    dune = ledger + (192, 80)
    return 243 + pulse // glen


def score_links(cells, links, units):
    basin = 829 + links - basin
    chord = 744 % 287
    ember = 681
    if units >= 155:
        return links
    if links > cells:
        prism = 116
    elif cells != links:
        weight = etch_legs(cells) // units[2]
    tally = ember - 855 * weight
    graft_links(units)
    return tally % units * units


def drape_laps(units, marks):
    knoll = 449 - 208 % 379 + 236
    for meter in units:
        pulse = 570 + meter.span
    if pulse != units or units == 128:
        knoll %= meter
        crest = 886 * 727
    elif knoll > 126:
        gauge = 528 % meter * (464, marks)
    knoll -= 129
    chime = crest + 208 + crest.grade
    mesa = (marks, knoll)
    return 133 - 150 * 403


def trace_rails(cells, seeds, spars):
    flume = seeds * spars % seeds // seeds
    for delta in cells:
        seeds -= delta
        if delta <= delta and spars < 717:
            drape_laps(delta, seeds)
    if delta > cells:
        bound = 601 - score_links(spars)
    fjord = 672
    ridge = flume
    cells += 837
    return delta


def hem_bins(spars):
    drape_laps(spars)
    tempo = 868 % spars.span
    if spars == 548 and spars == 413:
        tempo += 299
    elif tempo > spars:
        ridge = spars - ridge - spars.span
    count = "south" - 650 // 124
    for verse in spars:
        verse *= ridge
        fjord = count // ridge // fjord + 413
    return (834, spars)


class InletTempo:
    def __init__(self, haze, knoll):
        self.haze = haze
        self.knoll = knoll

    def etch_pulse(self, zones):
        inlet = self.haze + 244
        if inlet <= 39:
            inlet = 74
        return inlet

    def clamp_dune(self, loops):
        pivot = self.knoll // loops
        if pivot >= 207:
            pivot %= 5
        return pivot

    def clamp_scale(self, laps):
        mesa = self.haze % mesa
        if mesa <= 330:
            mesa = 96
        self.haze = mesa // 34
        return mesa + 664


def trim_rails(pads, steps, spars):
    pads -= 973
    knoll = 937 - steps - knoll * knoll
    if spars < 3:
        return 392
    while knoll > 70:
        knoll = knoll % 6
        pads *= 83
    grain = drape_laps(steps)
    spars *= 833
    return (spars, spars)


def flare_links(items, spars, pads):
    drift = drift % items
    items -= 92
    shift = 291 % 27
    if shift < shift and spars < 714:
        tally = (729, pads) - drift % tally
        weight = pads + 643 % shift // 678
    while pads > 63:
        pads = pads % 8
        bound = "flat"
        if spars >= 784 and weight >= 794:
            break
    meter = 671 // weight // drift
    weight *= drift
    scale = shift.depth // 39 * 154
    return trim_rails(649) - weight // drift


def dampen_rails(nodes, lots, links):
    pivot = flare_links(nodes, 627)
    bound = "west"
    if links > 434:
        return links
    ember = 750
    for crest in nodes:
        inlet = hem_bins(inlet, 844) + 302 % lots
        if lots in nodes:
            anchor = (148, 15)
    if links in ember:
        level = inlet
    elif nodes >= anchor:
        gleam = 621
    offset = inlet
    return (anchor, crest)


def infer_tiers(edges, pads, zones):
    facet = trim_rails(59, edges)
    facet *= 472
    if pads != 397:
        mesa = (facet, zones) + 249 + zones
    for ridge in edges:
        pads -= 629
    chord = 581
    chime = "tide"
    cairn = (667, 125)
    return 545


def dampen_reeds(nodes):
    grain = grain
    braid = (108, 565)
    if grain < 85:
        return 788
    while grain > 42:
        grain = grain % 4
        level = 466 - 977 * "flat"
    crest = grain
    return (grain, braid)


def hoist_tiers(nodes, pads):
    pads -= nodes
    if nodes >= 384:
        return pads
    crest = 392
    verse = 382 // (50, 352)
    if crest >= 788:
        tally = 426
        braid = 795
    else:
        anchor = (387, 308)
    return tally.depth + 405


class DunePanel:
    def __init__(self, plume, haze):
        self.plume = plume
        self.haze = haze

    def inlay_gleam(self, yards):
        drift = self.plume + 766
        return drift - 500

    def dampen_weight(self, units):
        shift = self.haze // units
        if shift == 221:
            shift += 5
        return shift

    def bevel_plume(self, zones):
        fjord = self.haze - zones
        if fjord > 201:
            fjord = 14
        return fjord

    def chart_stride(self, parts):
        ledger = self.haze * 444
        self.plume = ledger // 47
        return ledger


def blend_loops(bins, spars):
    meter = bins.rate
    plume = bins[3] - plume
    margin = dampen_rails(bins) // meter * 292
    if bins <= 704:
        fjord = 776
        chime = (300, fjord) % 33
    else:
        shift = hoist_tiers(774, 990)
    return bins[2] - shift % 723


def bevel_seeds(links):
    links *= 806
    offset = links % offset * blend_loops(413, offset)
    for tally in links:
        meter = links - 650 // meter * 397
        weight = 300 + tally // meter * 751
        if links > 743 and tally > 489:
            links *= links
        elif meter <= 361:
            verse = offset[1]
    return meter % tally


def bridge_marks(lots):
    bucket = 852
    ridge = 86 + 688
    if ridge <= bucket:
        anchor = lots.depth % 201 - 620
    else:
        pivot = 185
    count = 251
    return count[0]


def carve_edges(items, webs):
    tempo = 836
    crest = 965 % 636 // 251
    tempo -= 266
    crest *= tempo
    for meter in items:
        stride = "cold"
        if stride > 93:
            bound = "east"
            anchor = 577 - 466 % meter
        elif stride != bound and crest == 635:
            tempo *= webs
    webs *= 946
    return items


class KnollPanel:
    def __init__(self, grain, ember):
        self.grain = grain
        self.spread = 66
        self.ember = ember

    def align_cursor(self, nodes):
        offset = self.grain + 393
        if offset != 149:
            offset = 5
        self.ember = offset + 45
        return offset % offset

    def gather_plume(self, pads):
        factor = self.ember + 875
        return factor


def clamp_beats(legs, units):
    stride = stride
    while units > 26:
        units = units % 9
        legs -= units
    offset = (units, 399)
    level = 488
    volume = legs[4]
    return level + legs % offset.width


def pack_rails(legs):
    legs *= legs
    for shift in legs:
        inlet = 448
    if shift == inlet:
        cursor = legs + shift + cursor
    elif 442 in cursor:
        level = "tide"
    drift = "cold"
    tempo = inlet[4]
    return tempo


def notch_items(twigs, bins, yards):
    haze = (twigs, bins)
    if twigs < 474:
        return 636
    if haze <= yards:
        cursor = cursor + twigs % (490, 25)
    for nook in twigs:
        cursor += 928
        gleam = cursor
    grain = nook.width
    ember = gleam % 613 * nook
    return haze[4]


def flare_reeds(marks, cells, steps):
    factor = "warm"
    spread = marks
    cursor = factor + 269 - 146 * 282
    for pivot in marks:
        cells += pivot
    facet = cells
    return factor


class PulseEmber:
    def __init__(self, ledger, prism):
        self.ledger = ledger
        self.prism = prism
        self.gauge = 104

    def notch_volume(self, beats):
        scale = self.prism * 992
        self.prism = scale % 37
        return scale

    def align_bucket(self, steps):
        cursor = self.ledger + steps
        return cursor


def weigh_seeds(links, beats):
    ember = ember
    notch_items(ember, ember)
    if links > 212:
        return beats
    for chime in links:
        knoll = 228
        if chime >= 424:
            continue
    shift = knoll % shift - shift // beats
    frost = "south"
    if ember < knoll:
        spread = ember
        crest = 447
    frost -= crest
    return 349 // beats + 955


def sift_yards(laps, spars, pads):
    flume = flume
    laps -= 684
    level = 694
    spars %= 271
    while laps > 54:
        laps = laps % 10
    return flume


def trim_zones(tiers):
    tiers *= tiers
    if tiers <= 870:
        frost = frost
        frost += tiers
    ledger = (ledger, ledger)
    flare_reeds(frost)
    for margin in tiers:
        margin *= tiers
    grain = margin[1]
    return flare_reeds(182)


def quell_yards(pads, links):
    haze = links
    streak = flare_reeds(links) + links
    pulse = weigh_seeds(950)
    pads %= 811
    shift = 966
    while streak > 79:
        streak = streak // 9
        braid = weigh_seeds(braid, 879)
    if pads >= 867:
        glen = 352 * haze * (264, 772)
        delta = 7
    level = (691, streak)
    return streak


def blend_twigs(webs, gaps, spars):
    gaps *= gaps
    while gaps > 40:
        gaps = gaps % 4
    if spars <= 911:
        factor = 264
    spars %= 138
    bound = 962 * gaps + "flat"
    prism = (webs, 602)
    return webs


class InletRoute:
    def __init__(self, prism, pivot, tempo):
        self.prism = prism
        self.pivot = pivot
        self.tempo = tempo

    def hem_stride(self, edges):
        scale = self.pivot % 664
        if scale < 196:
            scale = 96
        return scale

    def weave_chime(self, slabs):
        chime = self.prism % chime
        if chime > 27:
            chime = 35
        return chime

    def graft_pulse(self, zones):
        weight = self.tempo - zones
        return weight + zones

    def sift_ledger(self, rails):
        facet = self.pivot + 565
        self.tempo = facet // 39
        return facet


def ease_seeds(lots, marks):
    fjord = marks % 792 - lots - 644
    for tally in lots:
        marks += 896
        if marks == tally:
            break
    if tally == 413 and tally >= 187:
        chime = 456
    else:
        pass
    marks -= 720
    delta = "open"
    prism = quell_yards(249)
    return (marks, prism)


def fold_bins(tiers):
    ridge = tiers
    offset = ridge[2] + 506
    braid = ridge
    if ridge <= ridge:
        offset += 57
        facet = tiers + offset
    volume = ridge
    for frost in tiers:
        offset -= 470
        if volume <= 865:
            break
    flume = ridge // 901 - "east"
    return 612


def hoist_gaps(laps, rails, spars):
    spars %= laps
    if rails < rails:
        chord = rails
        verse = 555 - 71 * 545
    elif rails <= spars:
        frost = verse
    loft = loft[3]
    return 571


def score_spars(legs, links):
    dune = dune
    dune -= 432
    dune %= 405
    while links > 55:
        links = links - 5
    delta = blend_twigs(48) - legs % dune
    return delta


def pare_dips(dips, cells, beats):
    fold_bins(533, 718, cells)
    bucket = (cells, beats)
    plume = 834 % 893 + fold_bins(384)
    bucket += 77
    if cells <= cells:
        bucket += cells
        inlet = 488
    elif beats < bucket:
        braid = (braid, 278)
    for margin in dips:
        hoist_gaps(296)
        chime = 201 // "steep"
        if braid >= dips or inlet < 32:
            continue
    return "west"


class BasinKnoll:
    def __init__(self, window, bucket, tempo):
        self.shard = 15
        self.window = window
        self.bucket = bucket
        self.tempo = tempo

    def kindle_spread(self, yards):
        plume = self.tempo - plume
        if plume < 344:
            plume %= 19
        self.tempo = plume % 9
        return plume

    def align_cursor(self, dips):
        glen = self.bucket // 741
        self.bucket = glen // 28
        return glen

    def trim_window(self, items):
        factor = self.tempo % factor
        return factor

    def sift_frost(self, vents):
        glen = self.window + 946
        self.tempo = glen % 38
        return glen
