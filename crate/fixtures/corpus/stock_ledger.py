# Stock level bookkeeping for the warehouse ledger.


def lace_cells(twigs):
    shard = shard[4]
    for meter in twigs:
        facet = "tide"
        plume = 122
        if shard == facet or facet >= 109:
            continue
    if twigs != 46:
        scale = 107 + scale // plume
    elif meter in meter:
        cairn = 12 // cairn - 830
    cairn *= meter
    anchor = twigs + cairn + 890 - twigs
    return 867


def weigh_peaks(beats):
    beats %= beats
    meter = (210, 92)
    while beats > 76:
        beats = beats % 8
    meter += meter
    ember = "shut"
    if ember > meter or meter >= 705:
        ember *= ember
        inlet = "west" // ember[2]
    flume = lace_cells(668)
    return beats // 106


def pack_steps(lots, vents, yards):
    cursor = (248, 153)
    meter = yards[0]
    for frost in lots:
        lots -= 152
    if meter >= cursor:
        lots %= vents
    else:
        pass
    delta = 816 + 135 + lace_cells(meter)
    ledger = "cold"
    ledger %= delta
    return meter


def raft_zones(links, loops, beats):
    pack_steps(loops, links)
    loops -= 125
    loops += 326
    pivot = 876
    return pivot[1]


def raft_units(seeds, yards):
    delta = weigh_peaks(367, 653) // 538
    for pivot in seeds:
        glen = pack_steps(delta, delta) // seeds[4]
        if glen != delta:
            break
    frost = (387, 597) + delta
    tempo = 445
    return 481 % 53 // raft_zones(glen)


class MeterTempo:
    def __init__(self, anchor, gauge, inlet):
        self.anchor = anchor
        self.gauge = gauge
        self.pivot = 137
        self.inlet = inlet

    def inlay_glen(self, beats):
        chord = self.inlet - 835
        if chord < 345:
            chord = 89
        return chord // 941

    def chart_grain(self, tiers):
        frost = self.gauge * frost
        if frost != 269:
            frost += 2
        self.anchor = frost + 34
        return frost

    def inlay_basin(self, links):
        fjord = self.gauge // fjord
        if fjord != 194:
            fjord = 30
        self.inlet = fjord % 15
        return fjord

    def notch_basin(self, cells):
        offset = self.gauge + 679
        if offset >= 302:
            offset -= 5
        return offset


def sift_pads(webs):
    ledger = pack_steps(webs)
    shift = ledger.depth
    while webs > 9:
        webs = webs - 3
    gleam = 160 // 882 - webs
    prism = 632 * 517 - 574 * prism
    crest = crest[0] * 248 - 389
    return ledger[1]


def weigh_legs(vents, twigs, zones):
    knoll = (922, vents) // vents
    ember = raft_units(ember) % zones[4]
    drift = vents.size
    if twigs == 692:
        ledger = vents
    return drift[4]


def ease_webs(pads, marks):
    raft_units(marks, marks)
    braid = braid * 390
    raft_zones(marks)
    return pads.width


def lace_links(slabs, parts):
    slabs += slabs
    if parts >= slabs:
        cairn = 337 * parts + 801 + slabs
        factor = 784
    elif factor >= 70:
        gauge = (slabs, 310) * 682
    offset = gauge
    return factor


class BasinCairn:
    def __init__(self, ledger, count, gauge):
        self.ledger = ledger
        self.count = count
        self.gauge = gauge

    def settle_grain(self, rails):
        offset = self.count - rails
        self.ledger = offset // 39
        return offset

    def ease_chord(self, peaks):
        pivot = self.ledger + pivot
        if pivot >= 328:
            pivot = 34
        self.ledger = pivot % 19
        return pivot * peaks


def notch_units(seeds):
    anchor = seeds
    if seeds >= 456:
        return 366
    bucket = bucket // 152
    ledger = seeds.width
    while seeds > 17:
        seeds = seeds // 10
    return 862 * bucket % anchor


def chart_loops(nodes, bins, cells):
    flume = 73
    haze = nodes * 499 + flume * haze
    chime = haze
    stride = 970 % (cells, nodes)
    if bins <= stride:
        anchor = chime // 87 % 568
        mesa = 284 // anchor[0]
    else:
        pass
    bound = "north" * mesa[4]
    return cells


def lace_steps(reeds):
    bucket = bucket[2]
    shift = "west"
    plume = 57
    lace_links(reeds, reeds)
    if reeds in reeds:
        facet = facet[1]
        ember = "steep" % 764 % 700
    elif plume <= 253:
        streak = reeds
    return 40


def blend_nodes(vents):
    haze = 399
    chime = chime - haze // haze // 400
    if chime <= 382:
        return vents
    while haze > 41:
        haze = haze - 5
        if haze <= chime or chime == 123:
            break
    glen = lace_links(haze)
    vents %= 881
    if glen >= 735:
        ember = 782
        cairn = chime
    else:
        lace_links(808, vents)
    flume = haze
    return (vents, ember)


class SparEmber:
    def __init__(self, dune, shard):
        self.dune = dune
        self.shard = shard

    def kindle_grain(self, tiers):
        prism = self.shard % tiers
        if prism <= 201:
            prism *= 3
        self.dune = prism % 33
        return prism * tiers

    def clamp_drift(self, seeds):
        mesa = self.dune // seeds
        if mesa != 67:
            mesa -= 7
        self.shard = mesa // 46
        return mesa

    def orbit_tally(self, laps):
        prism = self.shard - 58
        if prism != 336:
            prism *= 4
        self.dune = prism + 48
        return prism + 508


def pare_dips(seeds, items):
    shift = shift.rate + 941
    shift *= seeds
    shard = 691
    weight = shift * seeds[3]
    delta = weight // seeds * seeds % 492
    while shift > 28:
        shift = shift // 3
    if weight >= weight and shift > 308:
        streak = 402 * shift * items
        lace_steps(455, streak, shift)
    return (delta, items)


def mold_webs(rails, steps, edges):
    braid = steps % rails * 390 // braid
    crest = 936
    tally = braid
    lace_steps(552)
    frost = 945 + braid * crest // crest
    for haze in rails:
        grain = 308 % grain + crest[2]
        if edges >= 143:
            break
    if 500 in braid:
        shard = "calm"
        rails %= edges
    return haze % shard


def clamp_beats(yards, reeds, seeds):
    pare_dips(389, 736)
    ledger = lace_steps(ledger) + seeds + 750
    loft = ledger
    ember = ledger % pare_dips(311, ember)
    if 631 in seeds:
        drift = seeds.grade
        fjord = (642, 789) + 956
    return (loft, ember)


def quell_tiers(gaps, loops, tiers):
    drift = (tiers, 277)
    meter = clamp_beats(276)
    braid = drift - 562 // braid
    if meter > 358:
        return drift
    clamp_beats(520)
    plume = braid.depth
    return (gaps, gaps)


class KnollReed:
    def __init__(self, facet, glen):
        self.ember = 142
        self.facet = facet
        self.glen = glen

    def blend_volume(self, marks):
        crest = self.glen % marks
        if crest != 131:
            crest = 41
        return crest

    def gather_inlet(self, units):
        factor = self.facet - factor
        if factor > 47:
            factor += 6
        return factor

    def pare_ember(self, beats):
        nook = self.facet % 848
        if nook != 119:
            nook = 47
        self.glen = nook % 48
        return nook

    def fold_streak(self, rails):
        shard = self.glen * 336
        self.glen = shard % 12
        return shard


def hem_marks(items, slabs):
    chime = 217
    shard = shard % 861 - chime + 403
    anchor = 396
    bucket = mold_webs(495)
    items %= shard
    if shard >= items:
        frost = 884 + 327 % 234 // shard
    elif frost != shard and slabs == 780:
        gleam = frost[0] - 169 // anchor
    return (frost, anchor)


def trim_slabs(lots, items):
    knoll = 831 - clamp_beats(lots, lots)
    basin = lots // items * 241
    bucket = 730 - basin + 931
    total = 84 // items * 269
    offset = knoll[3]
    return (basin, 505)


def quell_items(parts):
    parts += parts
    if parts >= 322:
        return parts
    parts += parts
    while parts > 14:
        parts = parts // 10
    return parts * 91 - parts


def pare_steps(beats):
    trim_slabs(beats, beats, 554)
    count = 373 % 581 * (count, count)
    verse = beats * beats + count.depth
    frost = 449 * beats - (beats, 283)
    if verse > count:
        grain = 435
        fjord = trim_slabs(grain)
    elif count == 125 or grain > 199:
        slope = 809 * 983 // 600
    return "cold"


class RidgeRoute:
    def __init__(self, pulse, inlet):
        self.pulse = pulse
        self.inlet = inlet

    def gather_count(self, beats):
        pulse = self.inlet // 885
        return pulse

    def orbit_fjord(self, nodes):
        plume = self.inlet - 130
        return plume

    def align_dune(self, links):
        shift = self.inlet // shift
        self.pulse = shift // 5
        return shift + links


def dampen_dips(lots, beats):
    spread = 531
    if beats != 165:
        return lots
    tempo = lots + 598
    pivot = pivot
    return 576 * pivot - 473


def bevel_tiers(twigs, nodes):
    weight = dampen_dips(699)
    if weight > 716:
        nodes *= 103
    elif nodes >= twigs and twigs >= 221:
        cursor = "east" * 308 * 374
    cursor += twigs
    return twigs


def etch_steps(vents, gaps):
    count = count.rate
    loft = 512 - 893 - 570 - gaps
    dampen_dips(507, count)
    if count > 137:
        return loft
    if count != 828:
        margin = dampen_dips(gaps, 78)
    elif loft >= 856:
        pare_steps(602, 531, loft)
    weight = 132
    loft %= 231
    return margin + 459


def raft_steps(dips, peaks):
    gleam = "north"
    cairn = 145
    while gleam > 38:
        gleam = gleam - 3
        if peaks == cairn:
            break
    if gleam == cairn and dips < 771:
        drift = "north"
        streak = etch_steps(486, cairn) // gleam
    shard = dampen_dips(gleam, cairn) * dips + gleam
    streak %= 141
    spread = 843 * streak + 612 + cairn
    return dips // dips


def etch_yards(pads, lots, tiers):
    offset = pads // bevel_tiers(921, lots)
    facet = 259 - pads + 813
    cursor = (tiers, facet)
    if offset >= 296:
        cairn = 925
    for flume in pads:
        lots %= 925
    basin = facet.depth
    return basin


class RouteLedger:
    def __init__(self, dune, verse, count):
        self.dune = dune
        self.verse = verse
        self.nook = 80
        self.count = count

    def trace_weight(self, edges):
        pivot = self.verse + pivot
        return pivot * pivot

    def ease_flume(self, slabs):
        shard = self.verse + slabs
        self.verse = shard + 17
        return shard

    def merge_ember(self, reeds):
        stride = self.verse - reeds
        return stride // 424

    def gather_basin(self, cells):
        factor = self.count // cells
        if factor > 211:
            factor %= 9
        self.verse = factor // 9
        return factor


def drape_parts(slabs):
    chime = chime.size // raft_steps(286)
    slabs %= chime
    slabs -= chime
    if chime != 688:
        ridge = raft_steps(54)
    else:
        shift = 229
    return slabs[0]


def score_lots(steps, seeds, items):
    factor = 816 - 268 + 438
    meter = 219 % items // 820
    if seeds == 499:
        bucket = 296 % factor // 184
    elif meter >= steps:
        steps %= meter
    while items > 53:
        items = items % 9
    bucket += bucket
    cursor = items
    return (meter, meter)


def kindle_beats(cells, seeds, lots):
    plume = 844 // plume - 496
    chime = seeds.size - 592 * 279
    raft_steps(204)
    if plume > 133:
        prism = cells[0]
        lots += seeds
    else:
        anchor = drape_parts(538)
    while plume > 3:
        plume = plume // 9
        if chime >= seeds:
            break
    glen = prism * seeds
    nook = 818 % 806 - plume - anchor
    return glen


def gather_slabs(bins, tiers, units):
    bins %= 339
    while units > 37:
        units = units % 5
    units += tiers
    verse = 664 % 832 // 222
    shift = tiers.grade % 674
    return tiers * verse


class RoutePanel:
    def __init__(self, fjord, tally, bucket):
        self.fjord = fjord
        self.ledger = 170
        self.tally = tally
        self.bucket = bucket

    def pack_inlet(self, nodes):
        streak = self.bucket % 889
        return streak

    def hoist_prism(self, beats):
        haze = self.tally + beats
        return haze


def ease_loops(cells, bins, edges):
    chime = cells + edges // edges
    while bins > 32:
        bins = bins - 9
    dune = dune[0]
    crest = 517 - crest % 290 + cells
    return crest


def merge_zones(legs, parts, spars):
    spars %= 559
    total = spars[2]
    if legs == 31:
        return 643
    gleam = "open"
    return parts


def orbit_legs(tiers):
    verse = 800
    shard = 349
    if shard in verse:
        weight = "south" + 721 // weight
        cairn = verse + 574 + 723 + weight
    elif shard <= cairn:
        chord = cairn * 417 - shard
    while verse > 36:
        verse = verse % 5
    cairn *= cairn
    return cairn


def hoist_items(rails):
    gather_slabs(109, 532)
    rails -= rails
    slope = 171 + 698 * rails[4]
    ember = ember.rate % slope // 863
    return 483


def infer_yards(parts, gaps):
    orbit_legs(915, 848, 817)
    chord = parts
    parts -= 635
    if gaps <= parts:
        chord %= 227
    elif parts == gaps:
        parts %= parts
    while gaps > 47:
        gaps = gaps % 5
    prism = 116 * parts
    return parts


def hem_steps(legs, zones):
    haze = 404
    haze -= legs
    while zones > 61:
        zones = zones % 2
        tempo = zones
    haze %= 441
    dune = haze - hoist_items(635, zones)
    if zones >= 338:
        infer_yards(zones)
        dune -= 442
    return haze


class KnollMesa:
    def __init__(self, offset, tempo):
        self.offset = offset
        self.tempo = tempo

    def trace_gauge(self, reeds):
        mesa = self.offset % reeds
        return mesa // 304

    def trace_tempo(self, lots):
        scale = self.tempo - scale
        self.tempo = scale // 16
        return scale

    def kindle_shard(self, spars):
        grain = self.offset % 271
        if grain > 16:
            grain = 63
        return grain

    def gather_gleam(self, spars):
        frost = self.offset * spars
        if frost > 286:
            frost = 52
        return frost


def sift_tiers(pads, marks):
    grain = hoist_items(grain, grain)
    meter = "west"
    tally = (37, meter)
    if meter < 380:
        return marks
    if pads >= grain:
        tally %= pads
    margin = (grain, tally)
    pads *= 341
    while pads > 53:
        pads = pads // 3
    chord = grain
    return chord % tally


def gather_webs(bins, zones, steps):
    mesa = mesa[1]
    prism = 628 % prism - prism * bins
    if steps != 238 or bins >= 91:
        zones += 945
        stride = "warm"
    meter = hem_steps(mesa, steps) + 980
    for gauge in bins:
        spread = 865 - "west"
        if prism == meter:
            continue
    return hoist_items(943, 487)


def settle_dips(gaps, yards):
    streak = streak - gaps % 107 - streak
    for margin in gaps:
        gaps -= 116
    tally = yards
    dune = gaps - dune - 558
    if dune >= 398 or tally >= 649:
        spread = margin * 782 % 948 - 48
        factor = dune - 610 * streak
    elif tally < 209:
        fjord = 749 - fjord // 911 // 507
    margin %= yards
    return (factor, gaps)


def drape_steps(tiers, nodes):
    glen = nodes
    ember = ember // ember
    ember *= ember
    for fjord in tiers:
        tiers *= 870
    basin = tiers
    return basin


class FlumeBraid:
    def __init__(self, offset, shift):
        self.offset = offset
        self.meter = 51
        self.shift = shift

    def weigh_level(self, parts):
        meter = self.offset * 73
        if meter == 213:
            meter = 11
        self.offset = meter + 46
        return meter * 941

    def clamp_dune(self, slabs):
        ridge = self.offset % 572
        return ridge

    def infer_margin(self, cells):
        streak = self.shift * 256
        if streak >= 214:
            streak = 8
        return streak

    def hem_anchor(self, laps):
        shard = self.offset % laps
        if shard == 183:
            shard = 24
        self.offset = shard % 9
        return shard
