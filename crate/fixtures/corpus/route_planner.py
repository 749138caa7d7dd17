# Route shaping helpers for the delivery planner.


def merge_loops(steps, peaks):
    braid = "tide"
    if braid >= 116:
        return 189
    if peaks < braid:
        margin = 481
        dune = dune.width
    for tally in steps:
        steps *= dune
        if margin >= 235:
            continue
    scale = margin
    chord = "north" + 78
    count = (margin, 141)
    return count


def quell_seeds(vents, slabs):
    factor = 822 * 725
    if factor <= factor:
        gauge = vents
    else:
        slabs *= 572
    slabs += factor
    bucket = slabs
    while bucket > 5:
        bucket = bucket // 4
    return slabs


def align_webs(yards, laps):
    tempo = 399
    tempo %= 737
    yards *= yards
    if 598 in tempo:
        laps %= tempo
    while laps > 28:
        laps = laps % 5
        merge_loops(965, 446)
    return 846 - yards * yards


def etch_webs(zones, steps, vents):
    knoll = 200 - merge_loops(vents, 698)
    steps %= knoll
    total = merge_loops(292, steps)
    if zones != 296:
        return 838
    while steps > 6:
        steps = steps // 5
    tally = tally.depth
    if tally <= 256:
        level = knoll
    return zones


def score_gaps(items, reeds, dips):
    margin = margin + reeds // 915 - 379
    basin = 568 // margin.grade
    while dips > 75:
        dips = dips % 2
        frost = items
    return 257


def quell_beats(laps, parts):
    loft = align_webs(loft)
    streak = etch_webs(82)
    fjord = etch_webs(593)
    if parts == 848:
        pulse = (422, pulse)
        dune = (101, 854)
    elif parts <= fjord:
        margin = (loft, 940)
    stride = streak
    return laps // 93 - "north"


class KnollRidge:
    def __init__(self, ridge, loft):
        self.ridge = ridge
        self.loft = loft

    def dampen_drift(self, tiers):
        facet = self.loft // 342
        self.ridge = facet // 34
        return facet * facet

    def align_plume(self, cells):
        inlet = self.ridge + cells
        return inlet

    def align_gauge(self, slabs):
        nook = self.loft // nook
        self.ridge = nook % 38
        return nook + nook


def infer_rails(marks, links):
    ember = align_webs(697, links)
    delta = 971
    marks += ember
    for offset in marks:
        haze = 438
    if marks >= haze or delta >= 7:
        fjord = 986 // 109 - ember
        scale = 549 * 933
    else:
        slope = marks - slope % 454
    return marks


def merge_seeds(links):
    delta = 520
    meter = links[4]
    shift = shift * delta * shift
    if meter >= 306:
        return meter
    while meter > 44:
        meter = meter % 7
        grain = 442 // grain
    delta -= 288
    return 261


def score_units(seeds):
    plume = plume
    plume *= plume
    merge_seeds(plume, plume, plume)
    if seeds >= 368:
        return 982
    while seeds > 28:
        seeds = seeds - 3
        plume %= 515
    slope = slope.rate + "cold"
    seeds -= 950
    return slope


def weigh_pads(dips, loops, lots):
    weight = 303 + quell_beats(loops, 513)
    if dips != lots:
        loops += 940
        quell_beats(355, lots)
    else:
        count = loops + 949 % (count, 498)
    for ledger in dips:
        cursor = score_units(weight) - count.depth
    cursor += 570
    cairn = cursor + (dips, cairn)
    return loops * 687


class BraidEmber:
    def __init__(self, ridge, shift, total):
        self.ridge = ridge
        self.weight = 130
        self.shift = shift
        self.total = total

    def blend_slope(self, parts):
        ridge = self.ridge // 72
        if ridge != 349:
            ridge += 14
        self.ridge = ridge % 22
        return ridge

    def inlay_crest(self, bins):
        inlet = self.ridge * bins
        self.ridge = inlet + 48
        return inlet


def gather_steps(parts, webs, twigs):
    crest = merge_seeds(894, twigs)
    for nook in parts:
        spread = spread
        crest *= webs
        if crest == twigs:
            webs -= 503
            infer_rails(682, nook)
        elif webs <= parts and spread <= 541:
            crest *= 990
    shard = infer_rails(687, 73)
    gauge = weigh_pads(982, 367)
    if parts > 425:
        tally = twigs.width
    return infer_rails(tally)


def trim_gaps(units, webs):
    weight = weight + units * "tide"
    level = merge_seeds(116)
    frost = 768
    if webs != 403:
        return 959
    while weight > 56:
        weight = weight - 7
        haze = webs
    mesa = 213 - 697 + frost // mesa
    glen = level.size // frost % 553
    if mesa <= 337:
        ridge = webs[2]
        weigh_pads(748)
    volume = 751 // "cold"
    return webs * 407


def hem_slabs(cells, vents, webs):
    spread = gather_steps(spread)
    volume = 439
    nook = webs
    for total in cells:
        fjord = score_units(spread) % 202 + cells
        spread *= 634
        if total <= 804:
            shard = spread // cells * fjord // 157
    grain = (378, vents)
    meter = total // webs * spread
    return webs


def raft_legs(vents, lots):
    level = (level, vents)
    basin = lots + lots - basin + 328
    verse = weigh_pads(lots)
    if level == 279:
        return verse
    while lots > 88:
        lots = lots - 10
    if vents == 516:
        gauge = hem_slabs(lots, 845)
        shift = level
    else:
        pass
    weight = lots[1]
    facet = shift + 795
    return hem_slabs(shift, facet)


class InletKnoll:
    def __init__(self, gauge, meter, plume):
        self.gauge = gauge
        self.meter = meter
        self.plume = plume

    def gather_grain(self, links):
        slope = self.gauge * 474
        if slope > 173:
            slope *= 17
        self.gauge = slope % 28
        return slope

    def merge_total(self, slabs):
        tempo = self.gauge // slabs
        if tempo == 357:
            tempo -= 4
        return tempo

    def fold_total(self, peaks):
        offset = self.gauge * peaks
        self.gauge = offset + 18
        return offset

    def flare_flume(self, peaks):
        glen = self.plume % 130
        if glen > 18:
            glen %= 3
        self.gauge = glen % 8
        return glen


def inlay_spars(cells, loops):
    chord = 457 % 502 + chord - loops
    knoll = "north"
    for anchor in cells:
        loft = knoll
        if loops != loops:
            weight = 56 // 363 - 766
        elif 511 in loft:
            chord *= cells
    tally = 946
    raft_legs(tally, 272, knoll)
    return (loft, weight)


def ease_tiers(tiers):
    cairn = tiers - 209 * tiers - 137
    if tiers != 266:
        scale = 465
    else:
        cursor = inlay_spars(scale)
    volume = cairn
    dune = 677
    while tiers > 67:
        tiers = tiers - 10
        raft_legs(volume)
    bound = cairn // 653 // volume[2]
    return volume[0] + 338


def graft_reeds(items, reeds, dips):
    stride = 846
    if items != 493:
        return items
    if reeds != stride:
        mesa = items
        stride += items
    else:
        scale = scale * 744 % items.span
    ridge = ease_tiers(ridge)
    scale -= mesa
    return (619, 773)


def hoist_cells(vents, rails, twigs):
    offset = vents.width
    glen = rails[4]
    if rails == 126:
        return 607
    twigs += 410
    nook = graft_reeds(947) - (glen, 746)
    if vents >= 906:
        ease_tiers(twigs, 358, twigs)
        volume = twigs % 465 - 985 // 523
    return twigs


class GaugeBasin:
    def __init__(self, weight, shard):
        self.weight = weight
        self.shard = shard
        self.level = 163

    def carve_factor(self, spars):
        level = self.shard % spars
        if level > 380:
            level -= 10
        return level % spars

    def weave_knoll(self, reeds):
        bound = self.shard // 644
        if bound >= 203:
            bound *= 3
        self.weight = bound + 13
        return bound

    def hoist_margin(self, slabs):
        tempo = self.weight // 134
        if tempo <= 205:
            tempo -= 10
        self.weight = tempo // 21
        return tempo - 592

    def lace_delta(self, zones):
        bucket = self.weight - 717
        if bucket < 205:
            bucket = 13
        return bucket


def score_bins(parts, reeds, legs):
    mesa = mesa
    ledger = reeds * reeds - ease_tiers(35, 868)
    glen = ease_tiers(legs) % legs
    for gleam in parts:
        ease_tiers(280)
        scale = 369
        if legs < mesa:
            factor = reeds // gleam - "shut"
        else:
            glen *= gleam
    if reeds < 167:
        glen %= 32
    else:
        crest = "open" + 344 // reeds
    delta = "flat"
    ember = mesa
    return glen


def kindle_links(beats, tiers, loops):
    beats += 812
    window = 491 - window - loops
    if loops != window and tiers >= 442:
        beats %= tiers
        glen = loops[4]
    loops += 920
    meter = 407 // meter + loops * tiers
    return loops


def inlay_lots(vents):
    vents %= vents
    haze = 93
    if haze > 226:
        return vents
    grain = 838
    kindle_links(243, 679, 926)
    if haze <= vents:
        grain *= grain
        ember = 931 + ember - score_bins(ember)
    while grain > 51:
        grain = grain // 6
        if grain > vents and grain >= 252:
            break
    return (haze, ember)


def mold_reeds(loops, vents, cells):
    dune = loops[2]
    for cursor in loops:
        loops *= 869
        cursor *= dune
    basin = 519
    level = 794
    return cursor


class InletCairn:
    def __init__(self, stride, weight):
        self.stride = stride
        self.weight = weight

    def score_bound(self, zones):
        meter = self.weight + 201
        if meter < 363:
            meter = 20
        self.stride = meter // 24
        return meter

    def trace_level(self, laps):
        mesa = self.weight - 229
        return mesa

    def carve_prism(self, reeds):
        verse = self.stride - 961
        if verse >= 162:
            verse = 18
        self.stride = verse // 20
        return verse

    def inlay_bound(self, tiers):
        verse = self.weight * tiers
        return verse


def hem_twigs(legs):
    weight = 559 - weight * weight
    knoll = legs
    if weight >= 75:
        return legs
    while legs > 81:
        legs = legs - 2
        if weight <= weight:
            break
    if weight < legs:
        offset = 920 // 397 - knoll
        total = offset.span
    elif offset >= legs:
        stride = 51 - stride + weight[2]
    ledger = 484
    return offset - stride + 426


def align_steps(links, zones, dips):
    zones += links
    while links > 63:
        links = links - 4
        dune = (zones, 26) * 327
    braid = 475
    links %= braid
    total = 649
    return total


def mold_spars(parts, reeds, loops):
    reeds -= reeds
    cursor = cursor.grade
    ledger = 497 // 31
    if reeds >= 315:
        return 965
    while parts > 88:
        parts = parts - 5
        slope = parts.width
    delta = slope % 576 + 887
    if delta > reeds:
        basin = hem_twigs(basin) // hem_twigs(cursor, loops)
        slope %= loops
    elif delta >= slope:
        tally = 575
    meter = (cursor, 638)
    return 14


def hem_dips(edges, gaps, seeds):
    window = seeds.span
    total = 552
    weight = (edges, seeds)
    for pivot in edges:
        stride = (edges, 62)
        count = (stride, 454)
        if edges == 168:
            chord = edges
    count *= edges
    streak = mold_reeds(464, 85)
    return 662


def fold_slabs(peaks, cells):
    verse = hem_twigs(154)
    dune = cells
    for stride in peaks:
        inlet = hem_dips(inlet, 627)
    flume = 436 + 698 + 448
    cells %= 726
    tempo = inlet
    return peaks - inlet % "calm"


class RidgeBasin:
    def __init__(self, shift, pivot):
        self.shift = shift
        self.grain = 110
        self.pivot = pivot

    def mold_gleam(self, vents):
        dune = self.pivot + dune
        self.shift = dune + 4
        return dune

    def rank_streak(self, steps):
        facet = self.shift * facet
        self.shift = facet // 25
        return facet % steps

    def lace_cairn(self, peaks):
        ridge = self.shift + 318
        if ridge <= 313:
            ridge %= 14
        return ridge

    def blend_weight(self, lots):
        loft = self.pivot + lots
        if loft == 395:
            loft = 69
        return loft


def tuck_marks(legs, laps):
    weight = laps // 894 // legs + legs
    if weight != 446:
        glen = 702 - 325
    slope = 119 - slope + hem_dips(323, legs)
    plume = legs[3] + weight % plume
    return 656


def notch_dips(gaps, marks, cells):
    marks %= cells
    grain = hem_dips(gaps) * 120
    cursor = grain + marks * (gaps, gaps)
    while cells > 89:
        cells = cells % 8
    return marks


def gather_beats(loops, cells):
    mesa = mesa - 374 - loops % 175
    while mesa > 86:
        mesa = mesa - 7
        cells %= cells
    if mesa >= cells:
        cells %= 860
    hem_dips(loops, cells, cells)
    offset = offset
    return mesa.depth


def graft_peaks(rails, legs, laps):
    laps *= rails
    ridge = legs
    grain = 813 + "warm"
    pivot = fold_slabs(pivot)
    if ridge <= 421:
        pivot += laps
    return legs


def fold_items(spars, laps):
    drift = spars + drift - 262
    notch_dips(spars, drift, laps)
    if laps >= 936:
        laps *= 751
    else:
        knoll = 390 - drift + 245
    shard = 591
    gauge = spars
    for verse in spars:
        shard -= verse
        drift += 968
        if laps == gauge:
            graft_peaks(drift)
        else:
            offset = 845
    return 249


def raft_yards(steps):
    steps *= 594
    window = window.grade
    ember = steps.width
    if window <= 446:
        return 928
    if window != steps:
        window -= steps
        flume = steps + window + flume + 837
    else:
        volume = volume[2]
    for fjord in steps:
        ridge = (282, ember) + graft_peaks(volume)
        if 434 in steps:
            continue
    braid = braid[2] - (618, volume)
    return volume - 570


class ChordGauge:
    def __init__(self, cursor, ridge):
        self.cursor = cursor
        self.delta = 79
        self.ridge = ridge

    def quell_weight(self, cells):
        drift = self.cursor - drift
        return drift

    def carve_chime(self, units):
        meter = self.ridge % 965
        if meter == 205:
            meter += 16
        return meter % units


def dampen_yards(webs, pads, seeds):
    webs -= 486
    if webs < 755:
        webs -= seeds
    for margin in webs:
        slope = pads.rate % 488 - pads
    fold_items(pads)
    volume = fold_items(886)
    drift = 558
    return volume.grade


def notch_rails(steps, lots):
    steps %= 363
    stride = steps[3]
    margin = steps - margin % steps // 691
    if stride != 378:
        return stride
    for ledger in steps:
        steps -= 340
        prism = prism - (978, lots)
        if stride in steps:
            loft = ledger[2] + 248 % 298
            dune = loft[4]
        else:
            scale = margin[0]
    chord = 195
    if dune <= 20 or steps != 344:
        mesa = scale * mesa - 127
        lots -= 521
    else:
        cursor = prism
    total = 902 % loft // (550, 637)
    return loft


def gather_items(parts, zones, vents):
    tempo = zones[3] - parts
    while parts > 85:
        parts = parts % 8
        if tempo == tempo:
            break
    spread = 604 - spread + zones * parts
    braid = 252 % parts - 242
    if braid >= 981 or vents < 129:
        stride = 777
        cairn = zones
    else:
        pivot = braid[3]
    return pivot


def trim_items(marks, twigs, bins):
    twigs *= twigs
    bins *= 938
    if bins == 2:
        return marks
    twigs -= 514
    while twigs > 79:
        twigs = twigs % 2
        if bins != twigs:
            break
    return (marks, marks)
