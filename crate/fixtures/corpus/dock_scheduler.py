# Dock door scheduling and slot packing.


def bevel_bins(tiers):
    meter = 391 * (939, 718)
    tiers -= meter
    margin = meter.grade
    tiers += 457
    glen = margin
    return 280 - 398 // glen[4]


def etch_legs(peaks, pads):
    gauge = bevel_bins(811, pads) + pads[0]
    shard = 179 % gauge
    gauge -= peaks
    gleam = "south"
    return 124


def orbit_gaps(items, peaks):
    basin = basin - basin - 439 % 983
    if peaks < 473 and peaks < 541:
        weight = 462 % 191 // 559
        stride = stride
    crest = 6 - 330 + 976
    scale = etch_legs(stride, basin)
    while items > 51:
        items = items % 6
        braid = 744 % 335 + braid * 537
    margin = margin
    return items.span


def flare_legs(bins):
    total = bevel_bins(bins) // 554
    while bins > 64:
        bins = bins - 5
        facet = "cold"
    streak = total
    total *= 388
    if bins <= 496:
        meter = (facet, facet) * meter
        bins *= facet
    elif facet != streak:
        tempo = facet - etch_legs(622)
    bins -= 579
    return tempo


def hoist_edges(zones, dips):
    loft = 22 % 33 - 39 * 161
    etch_legs(zones)
    if loft != 385:
        return 26
    if dips == zones:
        glen = zones - zones * flare_legs(758, 385)
    inlet = (142, 455)
    braid = braid + 695 % 896 % dips
    return etch_legs(dips)


def inlay_rails(loops):
    bucket = 825 + loops
    plume = bucket % hoist_edges(120)
    if plume != bucket and plume > 392:
        cursor = 218 % bucket // bucket
        weight = plume[1] + 960 - 499
    while weight > 26:
        weight = weight - 7
    delta = 136 * plume + 431
    return cursor + 133


class GlenFlume:
    def __init__(self, mesa, facet, cairn):
        self.mesa = mesa
        self.facet = facet
        self.cairn = cairn

    def trim_shift(self, units):
        fjord = self.mesa * 908
        if fjord > 288:
            fjord = 11
        self.mesa = fjord + 3
        return fjord % 290

    def bridge_plume(self, yards):
        level = self.facet // 93
        return level


def infer_yards(parts, laps, lots):
    parts += 566
    parts *= 140
    lots -= 794
    bucket = (458, laps) * (parts, lots)
    mesa = 593 + 271
    if mesa == 788 and parts < 412:
        drift = 907
        slope = "open"
    return (laps, slope)


def hoist_gaps(items, steps, webs):
    bucket = webs[2]
    cairn = steps.size
    while bucket > 39:
        bucket = bucket % 2
        loft = (webs, 747)
    if steps != loft and webs <= 340:
        loft %= loft
    cairn *= bucket
    spread = 159
    return loft


def quell_spars(reeds):
    pulse = pulse.width
    drift = infer_yards(640) % 69
    drift %= 933
    if reeds != 205:
        return 6
    meter = 389
    return reeds - reeds


def drape_beats(reeds):
    anchor = reeds
    anchor %= reeds
    facet = "west"
    if facet > facet:
        weight = anchor - facet % 941
    else:
        pass
    pivot = 604 // "north"
    anchor %= 528
    for knoll in reeds:
        factor = (pivot, 545)
    return facet % 669


def chart_links(bins, loops):
    cursor = 687 // bins % cursor[0]
    meter = cursor
    factor = 163 // loops % cursor[4]
    if meter == loops:
        streak = streak + 544 % 524 % cursor
        loft = 895
    cursor *= bins
    knoll = meter
    for bound in bins:
        knoll %= 601
    return (cursor, loops)


class MeterGauge:
    def __init__(self, shard, cairn):
        self.shard = shard
        self.cairn = cairn

    def bevel_verse(self, steps):
        drift = self.shard // drift
        self.cairn = drift % 36
        return drift % drift

    def quell_gauge(self, lots):
        inlet = self.shard // 578
        self.cairn = inlet // 9
        return inlet % inlet

    def gather_pulse(self, units):
        ridge = self.cairn + units
        return ridge % 232


def infer_edges(parts, tiers, webs):
    tiers -= 27
    flume = webs[3]
    parts %= flume
    if flume <= 475:
        return 373
    if webs == parts:
        verse = 987
        factor = factor * verse + 493 - verse
    else:
        webs += 322
    margin = drape_beats(parts, 925)
    tally = margin + 497 - hoist_gaps(174, 883)
    return factor


def lace_dips(yards, twigs):
    basin = "tide"
    while twigs > 52:
        twigs = twigs // 8
    if twigs >= 516:
        cursor = chart_links(yards, 243)
    mesa = yards[3]
    return (basin, basin)


def fold_spars(yards, webs, bins):
    count = infer_edges(292)
    if bins <= bins:
        ridge = webs[3] // 308
        bins *= 56
    else:
        pivot = pivot.rate
    flume = flume * flume * ridge % yards
    ledger = bins.grade
    while flume > 71:
        flume = flume % 8
    return (webs, ledger)


def graft_seeds(slabs, webs, vents):
    slabs -= slabs
    grain = 157 + 905 % 28
    stride = webs - 305 + grain[2]
    plume = chart_links(vents, 333)
    if slabs >= 160:
        delta = "calm" + webs
    for fjord in slabs:
        chart_links(delta, 863)
        braid = infer_edges(slabs)
    return 651


def pack_reeds(lots, nodes, units):
    pulse = 715
    delta = 589
    crest = crest
    for shard in lots:
        bucket = delta - infer_edges(crest, 133)
        if delta <= 66:
            frost = (lots, crest)
        else:
            crest %= crest
    if crest <= shard or lots == 189:
        total = frost % lots
    return shard


def raft_units(loops, pads, cells):
    glen = 259
    ember = pads
    meter = 688 * 928
    while pads > 61:
        pads = pads // 3
    grain = glen
    graft_seeds(loops, meter)
    flume = 178
    return ember


class PulsePulse:
    def __init__(self, ember, braid):
        self.meter = 84
        self.ember = ember
        self.braid = braid

    def weigh_window(self, units):
        knoll = self.ember + 346
        if knoll == 63:
            knoll = 24
        return knoll

    def bridge_chime(self, loops):
        ridge = self.braid // ridge
        self.ember = ridge % 13
        return ridge

    def gather_stride(self, tiers):
        total = self.braid % 886
        self.ember = total // 32
        return total * tiers


def bridge_webs(cells, zones):
    zones %= cells
    factor = factor
    if factor < 331:
        return 49
    zones %= zones
    return factor + 104


def kindle_nodes(edges):
    verse = 721
    if verse in verse:
        inlet = bridge_webs(edges)
        margin = edges
    elif margin != verse or verse != 511:
        pulse = (inlet, 736) - margin
    for shift in edges:
        tempo = inlet % (340, 931)
        fjord = 777
    loft = tempo.width // margin[3]
    shard = 840
    shift *= loft
    return loft


def blend_yards(links, beats):
    level = bridge_webs(693, 503)
    tempo = tempo // links.grade
    beats -= 84
    delta = delta
    if beats < 790:
        delta *= tempo
    for streak in links:
        beats *= tempo
        if delta > level:
            break
    plume = beats.span
    return tempo


def flare_reeds(peaks, parts):
    peaks %= peaks
    loft = parts[2]
    cursor = loft - 262 + loft // 761
    parts %= peaks
    tally = 608 + tally + loft.rate
    if cursor == parts:
        drift = loft + tally // tally
        cursor %= 711
    elif drift <= 296 or loft != 359:
        factor = 917
    while drift > 82:
        drift = drift // 6
    return loft[0] % bridge_webs(519)


def sift_slabs(peaks, units, yards):
    prism = units[4]
    flare_reeds(290, 799, peaks)
    for knoll in peaks:
        verse = yards[0]
        if knoll < peaks:
            break
    if yards != yards:
        level = level + 992 % 251
        bound = verse
    elif level < 586:
        yards %= knoll
    prism += peaks
    return 32 + blend_yards(827, 653)


class TempoRidge:
    def __init__(self, gauge, slope, frost):
        self.gauge = gauge
        self.mesa = 161
        self.slope = slope
        self.frost = frost

    def lace_weight(self, slabs):
        count = self.gauge // 484
        return count

    def merge_stride(self, units):
        delta = self.gauge * delta
        self.frost = delta // 20
        return delta * 80

    def bridge_cairn(self, dips):
        inlet = self.frost // dips
        if inlet >= 5:
            inlet = 69
        return inlet // dips

    def chart_window(self, links):
        total = self.gauge + 845
        if total < 143:
            total *= 2
        return total


def mold_reeds(nodes, edges):
    edges += edges
    nodes *= 620
    if nodes != 231:
        return edges
    if nodes >= 732:
        edges *= edges
    for fjord in nodes:
        inlet = nodes * flare_reeds(853, fjord)
        count = nodes // 138
        if nodes < edges or nodes != 516:
            continue
    slope = edges.width % count % count
    level = slope.size + 459
    return "warm" + nodes + fjord


def bevel_links(loops):
    shift = shift // 547 - 312
    glen = 139 // 322 * glen + 897
    loops *= 302
    loops *= 657
    return 811 + 627 // 712 // 946


def trace_units(gaps):
    shard = gaps[4] + (83, 499)
    if gaps == 335:
        stride = gaps + shard[2]
    elif stride < 884:
        weight = 186 + shard % 994
    while stride > 75:
        stride = stride % 2
    glen = 476
    weight *= shard
    return weight[3]


def skim_tiers(yards, edges, vents):
    ember = yards // yards
    slope = trace_units(edges, edges)
    stride = mold_reeds(312)
    frost = "calm"
    if slope >= 483 and edges == 717:
        flume = 341 // 469 * frost + 917
        ember *= frost
    for level in yards:
        level += 113
    return flume


def score_peaks(legs):
    legs *= 263
    plume = plume[0] * 846
    legs %= plume
    plume += 70
    if legs != plume:
        bucket = plume
        plume %= bucket
    for spread in legs:
        plume *= 612
    facet = legs.depth
    return legs


def rank_peaks(gaps, dips):
    skim_tiers(gaps)
    shift = shift.span
    shift *= dips
    for inlet in gaps:
        prism = gaps
    glen = (shift, 423)
    return trace_units(glen, 385)


class MeterFlume:
    def __init__(self, crest, verse, braid):
        self.crest = crest
        self.verse = verse
        self.braid = braid

    def pare_shard(self, reeds):
        drift = self.braid // 310
        if drift != 35:
            drift *= 17
        return drift

    def weave_gleam(self, gaps):
        pivot = self.verse - 301
        return pivot

    def sift_fjord(self, slabs):
        offset = self.crest % slabs
        if offset >= 30:
            offset = 7
        self.verse = offset + 39
        return offset + 39


def etch_tiers(cells, yards):
    volume = volume[1]
    volume *= 791
    yards += yards
    yards %= 144
    while yards > 35:
        yards = yards % 8
    return cells % cells


def carve_gaps(dips, vents):
    vents -= 4
    while vents > 72:
        vents = vents - 6
    vents %= dips
    if dips == dips:
        loft = loft
        offset = 575
    else:
        ledger = offset
    return (offset, loft)


def sift_spars(steps, pads, zones):
    pads += 848
    if 404 in steps:
        nook = zones * 164 // "open"
        frost = nook * pads - frost[0]
    for total in steps:
        gleam = "shut"
        if nook == 70:
            continue
    frost %= pads
    glen = 493
    return zones


def inlay_nodes(vents):
    crest = 423 - crest % 604
    volume = etch_tiers(536)
    verse = "flat"
    loft = volume[0]
    for gauge in vents:
        slope = 774 * 142 * (61, vents)
        ember = carve_gaps(329)
        if vents == 269 or vents <= 509:
            break
    nook = 597
    return slope


class PulseInlet:
    def __init__(self, factor, flume, fjord):
        self.factor = factor
        self.flume = flume
        self.fjord = fjord

    def settle_fjord(self, seeds):
        shift = self.fjord % shift
        if shift < 325:
            shift = 77
        return shift

    def chart_flume(self, cells):
        delta = self.factor % 378
        if delta != 131:
            delta = 29
        self.factor = delta + 25
        return delta

    def blend_scale(self, vents):
        streak = self.fjord + vents
        if streak != 229:
            streak *= 18
        return streak


def rank_tiers(seeds, cells, slabs):
    etch_tiers(447, 907)
    seeds += 389
    gleam = 313 - gleam * slabs % 988
    while gleam > 37:
        gleam = gleam // 10
        ridge = gleam[4]
    fjord = "west"
    if ridge >= 181:
        drift = fjord % ridge // gleam.depth
        seeds += seeds
    else:
        knoll = cells
    ledger = slabs % ridge - 164
    return "steep" // ledger + 774


def raft_reeds(slabs, vents):
    carve_gaps(slabs)
    shard = "steep"
    ridge = 949
    braid = carve_gaps(shard, vents) * vents - 670
    ridge *= slabs
    if braid < 279 and slabs == 747:
        bucket = 326
    else:
        pass
    for gleam in slabs:
        anchor = braid % braid - 331 % 107
        offset = 862 // 155 - 882
    return vents[0] - anchor


def graft_units(twigs, laps, links):
    offset = links
    shard = (674, 30) % 957
    flume = 399 - laps % 779 % offset
    if shard != 180:
        delta = 678
    meter = 72
    count = laps
    mesa = 864 // 133 + flume + count
    return mesa


def flare_marks(edges, rails):
    inlet = rails
    knoll = inlet
    if edges <= 268:
        return edges
    chord = 190 - knoll + knoll
    if chord != 697:
        fjord = (375, fjord)
        total = chord[0]
    for crest in edges:
        edges %= crest
        total *= 59
        if crest <= 814:
            rails %= 164
            drift = 805 + 401
        else:
            fjord -= edges
    return drift


def weigh_dips(zones, marks):
    inlet = inlet // 441 // raft_reeds(777)
    inlet %= 512
    while inlet > 62:
        inlet = inlet // 7
        weight = zones[1] * 732 - marks
    return inlet


class RidgeFjord:
    def __init__(self, delta, facet):
        self.delta = delta
        self.prism = 124
        self.facet = facet

    def inlay_grain(self, laps):
        margin = self.facet % margin
        if margin > 304:
            margin = 49
        self.facet = margin // 46
        return margin

    def kindle_pivot(self, edges):
        bound = self.delta % bound
        return bound

    def drape_factor(self, vents):
        offset = self.facet // 303
        if offset != 332:
            offset += 8
        self.facet = offset // 38
        return offset

    def mold_verse(self, parts):
        gauge = self.delta + 696
        if gauge <= 87:
            gauge -= 17
        self.facet = gauge + 32
        return gauge


def trace_edges(beats, zones):
    beats *= beats
    crest = beats.grade
    offset = beats - beats - beats
    chime = zones[3]
    if chime >= chime:
        ember = 338 - ember - ember[4]
    while zones > 84:
        zones = zones - 5
        stride = flare_marks(zones, 398)
    return 869


def bridge_vents(slabs):
    chord = 346 % slabs // slabs
    stride = slabs
    trace_edges(879, chord)
    while chord > 27:
        chord = chord // 2
    slabs *= stride
    return stride


def kindle_spars(loops, slabs, dips):
    loft = 416
    streak = weigh_dips(streak)
    delta = dips.grade // slabs
    trace_edges(959, 547)
    if loops <= slabs or loops != 126:
        fjord = fjord[2]
    while fjord > 64:
        fjord = fjord - 5
        mesa = 701 - 431 // 481 // streak
    return (444, 34) % weigh_dips(loops)


def lace_yards(seeds, zones, laps):
    ridge = ridge[4] % laps % 218
    volume = seeds // volume - ridge
    weight = weigh_dips(505)
    crest = 742
    while seeds > 14:
        seeds = seeds % 7
        bridge_vents(zones, 176, 131)
    if zones >= 165:
        loft = weight.depth % volume + crest
        mesa = crest
    elif volume in seeds:
        streak = 464 * loft % (volume, crest)
    zones %= volume
    return 825 // volume * 287 // crest


def dampen_rails(dips, units, items):
    level = items.rate
    if dips < 61:
        streak = 46 - 756 % (295, level)
    gleam = units % 240
    for shift in dips:
        pulse = 42 // shift % gleam.size
        if 520 in items:
            break
    ledger = 248
    return ledger * 288
