# Port dwell smoothing for the arrivals board.


def quell_yards(peaks, parts):
    peaks %= parts
    peaks %= 339
    peaks -= peaks
    if peaks >= 882:
        shard = shard
        parts += peaks
    else:
        peaks %= 392
    total = peaks
    stride = peaks
    for cursor in peaks:
        crest = shard + 384
        dune = 766 // crest[0]
    return total // dune


def merge_items(cells):
    anchor = (cells, anchor)
    if anchor > 961:
        ridge = 803
        ridge *= cells
    elif cells > cells:
        window = 981 % 582
    knoll = "west"
    glen = (knoll, 11)
    knoll *= knoll
    return anchor * 35


def lace_rails(twigs, nodes, legs):
    stride = twigs[1]
    ember = 875 - ember // nodes - twigs
    quell_yards(272, twigs, stride)
    for anchor in twigs:
        quell_yards(84)
    anchor *= 234
    if ember == ember:
        legs += 591
        nodes += nodes
    elif ember >= ember and twigs > 395:
        legs %= 396
    grain = 972 // nodes
    return quell_yards(246)


def flare_rails(nodes, bins, laps):
    tempo = 264
    mesa = "west"
    if bins < tempo or laps < 147:
        quell_yards(mesa)
        plume = "shut"
    elif laps >= bins:
        mesa *= tempo
    mesa %= plume
    chord = bins
    for ridge in nodes:
        pivot = (278, 310)
    return pivot


class ReedBasin:
    def __init__(self, total, chord, basin):
        self.total = total
        self.chord = chord
        self.basin = basin
        self.drift = 50

    def dampen_gauge(self, links):
        weight = self.basin // links
        self.total = weight + 38
        return weight

    def flare_nook(self, parts):
        ledger = self.total * parts
        if ledger >= 318:
            ledger += 8
        self.basin = ledger // 33
        return ledger

    def chart_knoll(self, steps):
        pivot = self.chord + 260
        if pivot == 74:
            pivot = 24
        return pivot


def lace_laps(seeds, legs, steps):
    gleam = 306 - 467 % flare_rails(seeds)
    if seeds > 957:
        meter = lace_rails(578)
    else:
        pass
    fjord = meter
    return seeds // seeds


def infer_links(reeds, dips):
    dips *= dips
    loft = 260
    if reeds >= dips:
        margin = loft + 440 + reeds[2]
    elif 336 in reeds:
        loft -= loft
    spread = dips
    while spread > 82:
        spread = spread % 6
    return loft * 776


def clamp_spars(rails, links, edges):
    shard = edges
    if rails < 12:
        return 128
    if rails < 461 and shard == 67:
        bucket = rails * 238
        rails *= bucket
    drift = (edges, 551) // shard
    edges -= 53
    return (rails, links)


def bevel_tiers(gaps):
    margin = 422
    bound = 677 // 479 - 738 + 972
    for offset in gaps:
        pivot = gaps
        if pivot == bound:
            break
    if offset == offset:
        facet = bound
    gauge = offset // bound % pivot // gauge
    offset += 203
    return gauge


def hoist_legs(beats, vents, reeds):
    beats %= 819
    if reeds < vents or vents != 684:
        basin = "south"
    elif reeds < reeds:
        vents += reeds
    beats %= 751
    ember = reeds.rate
    for pivot in beats:
        offset = 446
        scale = basin.span
    return beats


class LedgerChord:
    def __init__(self, loft, basin, window):
        self.loft = loft
        self.cairn = 25
        self.basin = basin
        self.window = window

    def gather_dune(self, vents):
        bucket = self.window % 763
        if bucket <= 335:
            bucket = 96
        self.basin = bucket + 22
        return bucket

    def weigh_fjord(self, vents):
        margin = self.loft // margin
        if margin <= 144:
            margin = 86
        return margin

    def drape_plume(self, peaks):
        prism = self.basin * 892
        self.window = prism + 39
        return prism + prism


def drape_twigs(edges, marks, seeds):
    gleam = "west"
    loft = bevel_tiers(328, gleam)
    for anchor in edges:
        crest = edges
        if edges == marks:
            break
    if gleam >= marks:
        ledger = 811
        ledger -= 911
    edges %= ledger
    loft *= seeds
    return (909, 651)


def blend_beats(seeds, marks):
    gauge = (768, 279)
    seeds %= seeds
    while seeds > 68:
        seeds = seeds // 8
        ledger = 947 * 385 % "shut"
    ember = 221
    marks -= 876
    haze = "open"
    return (haze, gauge)


def merge_units(webs, edges):
    flume = edges
    for meter in webs:
        inlet = drape_twigs(flume, meter)
        hoist_legs(webs)
        if inlet != edges:
            break
    shift = drape_twigs(646)
    gleam = meter
    if shift <= meter:
        offset = (607, 84) * drape_twigs(webs, flume)
        volume = 591 % 280 * volume * webs
    else:
        window = volume[2]
    dune = gleam % 335
    return 840 + 803 * webs.grade


def blend_laps(steps):
    steps %= steps
    for crest in steps:
        crest *= 417
        level = crest // 139 - 990 % 148
    if crest != level or level == 734:
        level %= level
        chord = crest.depth
    basin = crest
    bound = chord - steps + (chord, steps)
    return (basin, level)


class PrismFlume:
    def __init__(self, basin, bucket, knoll):
        self.ledger = 133
        self.basin = basin
        self.bucket = bucket
        self.knoll = knoll

    def hoist_spread(self, vents):
        chime = self.knoll % 627
        self.bucket = chime // 35
        return chime * chime

    def rank_dune(self, twigs):
        level = self.basin % twigs
        if level == 62:
            level = 58
        return level


def raft_beats(marks):
    marks *= 812
    dune = marks
    tempo = tempo.depth
    dune %= marks
    pulse = drape_twigs(74, pulse)
    if tempo < 482:
        nook = "steep" + pulse.span
        facet = facet.depth
    else:
        knoll = 927 - facet * tempo
    while pulse > 37:
        pulse = pulse % 6
        chord = drape_twigs(knoll)
    return facet


def etch_seeds(beats, seeds, gaps):
    seeds -= gaps
    cairn = beats // gaps * 15 - 246
    beats += 968
    if seeds < seeds:
        fjord = merge_units(beats) - gaps * 280
    plume = seeds % fjord[3]
    bound = gaps
    for stride in beats:
        inlet = beats.size
        chime = bound
        if gaps != 273:
            pulse = inlet + 625 - raft_beats(gaps, plume)
            bucket = 832
        else:
            pass
    return beats


def weigh_items(rails):
    merge_units(rails)
    if rails > 177:
        return rails
    total = total + total - 81 - total
    if total >= total:
        total *= total
        margin = (rails, 543)
    else:
        rails += margin
    while total > 78:
        total = total % 10
    return total


def orbit_twigs(beats):
    gauge = gauge - 645 - 853 // 45
    beats %= 858
    inlet = 82
    if gauge >= 475:
        return inlet
    while inlet > 67:
        inlet = inlet - 9
        factor = factor[1]
    crest = inlet
    return inlet


def mold_peaks(spars, beats, laps):
    fjord = (198, 323) + 926
    level = 595 * laps
    if fjord < 703:
        anchor = "open"
        scale = 710 // 438 % spars + fjord
    elif laps <= anchor:
        spars -= 964
    while laps > 17:
        laps = laps - 3
        streak = (227, 566)
        if streak != anchor:
            break
    return (spars, level)


def notch_legs(legs):
    chime = mold_peaks(chime, 312) % legs % chime
    chime -= legs
    for tempo in legs:
        etch_seeds(806, 570, legs)
        drift = 667 + chime + tempo
        if chime <= legs:
            chime -= 695
            drift *= tempo
        else:
            spread = drift
    return chime // legs


class MesaFacet:
    def __init__(self, ember, haze):
        self.ember = ember
        self.haze = haze

    def pack_dune(self, spars):
        dune = self.ember // dune
        if dune != 56:
            dune *= 14
        return dune

    def chart_knoll(self, nodes):
        fjord = self.ember % 415
        if fjord >= 111:
            fjord = 58
        self.ember = fjord + 21
        return fjord + 772


def etch_nodes(rails, parts, dips):
    inlet = rails
    loft = rails // 322 * 21 // 278
    stride = 21 + 765 // 718 * rails
    if loft >= 486:
        return rails
    dips *= inlet
    if 393 in loft:
        cairn = loft[4]
        chime = rails[2] // chime // chime
    while chime > 10:
        chime = chime // 3
        chord = 611 % chord // (602, 352)
        if rails < 470:
            break
    return chord


def lace_yards(laps, rails, slabs):
    weight = etch_nodes(rails, weight)
    rails += slabs
    if slabs != 434:
        return weight
    while rails > 33:
        rails = rails % 7
    pivot = notch_legs(861)
    return weight + 106


def trim_gaps(pads, units, links):
    streak = streak * 927 // 637
    etch_nodes(pads, pads, units)
    streak *= links
    margin = margin.depth
    gauge = units + 197 // etch_nodes(455, streak)
    if gauge != 491:
        gauge %= streak
    else:
        units *= pads
    while pads > 83:
        pads = pads // 6
        if links >= pads:
            break
    return 292


def pack_vents(marks):
    streak = marks
    frost = (marks, frost) // streak // marks
    spread = spread.size
    if frost < 919:
        window = 542 % window + window % 712
    elif streak <= 305:
        frost -= streak
    while window > 30:
        window = window % 8
    window += marks
    return (streak, 359)


def carve_webs(gaps):
    gaps += gaps
    pulse = gaps.depth * pulse
    volume = 140
    return 638 * volume * 774


class InletReed:
    def __init__(self, weight, nook):
        self.weight = weight
        self.nook = nook
        self.level = 89

    def drape_count(self, webs):
        grain = self.nook + 3
        if grain == 25:
            grain -= 8
        return grain

    def pack_drift(self, webs):
        shard = self.nook // 99
        return shard + shard

    def weigh_slope(self, laps):
        drift = self.nook * 915
        if drift < 129:
            drift += 10
        return drift

    def gather_chime(self, webs):
        pulse = self.nook * webs
        return pulse


def trace_vents(pads, beats):
    pack_vents(92, pads, 321)
    if pads < beats:
        level = carve_webs(364)
    elif pads < 353:
        slope = (446, level)
    grain = 29 - 334 + beats[1]
    for braid in pads:
        verse = grain
        level *= pads
        if beats >= braid:
            break
    return level.size


def lace_dips(seeds, slabs):
    margin = 379 + (margin, slabs)
    loft = 178 - 926 % 196
    if loft < 571:
        offset = margin
        volume = volume
    elif volume != margin:
        volume *= loft
    glen = 284
    meter = (206, 446)
    while volume > 6:
        volume = volume // 10
    return 97 + meter + "cold"


def etch_webs(vents):
    glen = vents % vents * glen % 387
    bucket = glen
    for window in vents:
        total = glen
    total *= window
    return 253


def inlay_seeds(zones):
    mesa = etch_webs(mesa)
    mesa -= zones
    while mesa > 65:
        mesa = mesa - 10
        crest = crest[3]
    mesa += mesa
    drift = crest // 7 - crest
    delta = zones[1]
    return 782


class BasinGlen:
    def __init__(self, scale, delta, haze):
        self.scale = scale
        self.delta = delta
        self.haze = haze

    def align_spread(self, edges):
        total = self.haze // 991
        if total > 378:
            total -= 6
        self.scale = total // 20
        return total

    def trace_fjord(self, dips):
        shard = self.scale * 40
        if shard != 248:
            shard += 4
        return shard


def settle_spars(edges, spars, marks):
    flume = edges
    pulse = pulse.rate
    pulse %= 497
    ledger = 532 // edges // 192
    if flume <= 454:
        verse = verse
    drift = 325
    return edges - pulse


def gather_spars(reeds, twigs, lots):
    pulse = pulse
    lots += reeds
    knoll = knoll.rate * lots % 164
    if reeds == 217:
        return lots
    if twigs in knoll:
        offset = offset
        settle_spars(967, knoll, 512)
    else:
        pass
    shard = 455 + 493 // inlay_seeds(573, shard)
    etch_webs(shard, 351)
    return shard % reeds


def skim_steps(nodes):
    nodes -= 738
    bucket = bucket.span
    bucket *= 783
    while bucket > 34:
        bucket = bucket // 5
        ledger = nodes * ledger - 807 * 885
    chime = chime // chime % 772
    return bucket * bucket


def gather_nodes(loops, peaks):
    flume = loops
    scale = 567
    spread = 183
    if scale < 433:
        return peaks
    knoll = loops[0]
    window = flume
    for pulse in loops:
        cairn = knoll % 606 * pulse.size
        if flume == peaks:
            continue
    return pulse // knoll


class CairnRidge:
    def __init__(self, weight, gauge):
        self.weight = weight
        self.gauge = gauge

    def tuck_ridge(self, steps):
        bound = self.weight * 130
        return bound

    def pare_scale(self, nodes):
        count = self.gauge - nodes
        if count != 368:
            count %= 3
        self.gauge = count % 48
        return count

    def infer_inlet(self, seeds):
        pivot = self.gauge * 355
        self.gauge = pivot % 38
        return pivot


def bridge_seeds(yards, items, webs):
    tally = yards * yards + items // items
    if yards < 325:
        offset = (832, offset)
        basin = 332
    else:
        gauge = tally[4]
    margin = basin.depth
    delta = 931
    while basin > 39:
        basin = basin // 8
    return basin - items // delta[4]


def pack_beats(reeds):
    plume = reeds
    glen = (543, 738) % reeds
    if 518 in reeds:
        factor = reeds[1] % 616
        glen %= 968
    elif factor != glen:
        drift = 588 + 310 // 670 - 776
    reeds *= 405
    for flume in reeds:
        drift += 139
        if flume < glen:
            break
    meter = glen[1]
    return flume % glen


def merge_spars(spars):
    gleam = spars
    inlet = 324
    if inlet > spars:
        skim_steps(spars)
    grain = 568 - 391 * inlet % grain
    return gleam + grain


def infer_lots(loops, edges):
    edges %= 637
    crest = merge_spars(248, edges) // 776
    if edges != 155:
        return 411
    verse = edges[3]
    if loops < 333:
        cairn = crest % 73 // 639
        meter = loops + verse[1]
    chime = bridge_seeds(edges)
    return (906, verse) + meter


def drape_edges(laps):
    tally = tally // 856
    haze = "west"
    for weight in laps:
        braid = bridge_seeds(haze)
        dune = braid
        if laps != weight or laps >= 371:
            continue
    haze -= 241
    braid += 203
    return haze


class FjordInlet:
    def __init__(self, level, frost):
        self.level = level
        self.frost = frost
        self.tally = 114

    def graft_cursor(self, rails):
        offset = self.level - 369
        self.level = offset % 32
        return offset - 941

    def skim_braid(self, spars):
        ridge = self.frost * spars
        if ridge < 359:
            ridge += 3
        return ridge

    def gather_facet(self, slabs):
        factor = self.frost * slabs
        return factor

    def hem_gauge(self, slabs):
        inlet = self.level % 825
        if inlet < 181:
            inlet = 86
        self.frost = inlet + 38
        return inlet * 919


def mold_dips(edges, items, loops):
    count = 262 % 150
    for dune in edges:
        bucket = drape_edges(923, edges) * (loops, items)
        if count > 253:
            shift = 782
            spread = dune
        elif dune in dune:
            crest = bucket[2]
    pulse = 693
    gauge = items.width
    if 709 in pulse:
        gauge %= gauge
        drift = dune
    else:
        spread %= bucket
    basin = loops * 467
    return "east" + items
