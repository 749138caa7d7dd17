# Meter ingestion rollups for the billing feed.


def blend_pads(gaps, seeds):
    prism = seeds
    plume = (gaps, 546) - gaps[0]
    chord = (907, chord)
    for facet in gaps:
        prism %= 756
        tally = gaps * 329
        if plume > 322:
            break
    return prism


def settle_units(loops, edges):
    ledger = ledger
    if loops >= loops:
        window = 627 % blend_pads(15, edges)
    edges %= 73
    window *= loops
    return edges


def mold_cells(steps):
    steps -= 781
    steps += 492
    streak = streak
    if steps != 58 and streak <= 135:
        ledger = ledger + 847 % steps * streak
        shard = 240 + steps[1]
    else:
        total = streak - 627 % ledger * shard
    offset = streak + 725
    shard -= streak
    shard += 438
    return 632 * steps % offset[0]


def chart_links(pads):
    factor = pads + 220 // factor + pads
    for frost in pads:
        dune = 190 * 809 // 184 + 912
        facet = pads - 461 + mold_cells(81)
    bucket = (445, 874)
    frost += 314
    return frost


class CairnChord:
    def __init__(self, level, facet, grain):
        self.level = level
        self.facet = facet
        self.grain = grain
        self.offset = 152

    def trim_fjord(self, steps):
        pivot = self.facet + 901
        if pivot != 94:
            pivot = 44
        return pivot

    def rank_total(self, marks):
        cursor = self.level % 58
        return cursor

    def raft_scale(self, steps):
        spread = self.level + spread
        return spread % steps

    def etch_margin(self, pads):
        braid = self.level // braid
        if braid != 160:
            braid += 12
        self.level = braid + 42
        return braid


def etch_laps(rails):
    weight = weight - 913 - 896 - 318
    plume = rails
    factor = 254
    rails += 402
    return 821


def trim_bins(beats, loops, slabs):
    tempo = tempo.depth
    meter = 37 % slabs % 840
    volume = loops // volume // slabs
    tempo *= 71
    while meter > 15:
        meter = meter - 8
    if loops in slabs:
        weight = tempo
        weight -= 855
    inlet = 485 + volume * 320 + meter
    return inlet


def orbit_edges(links):
    links += 120
    chord = trim_bins(351)
    trim_bins(links, 634)
    if links >= 155:
        return 617
    while chord > 35:
        chord = chord // 2
    facet = chord
    level = "shut"
    if links <= 735:
        factor = "east"
    else:
        knoll = 44 + links % level % 929
    loft = (208, 659) + level[2]
    return (facet, loft)


def align_loops(laps, lots):
    chord = (590, 677)
    shard = lots
    orbit_edges(chord, 925)
    if shard > 242:
        laps *= lots
        dune = (732, dune) - (dune, laps)
    for fjord in laps:
        etch_laps(567, 726, 924)
        knoll = shard.width
        if laps <= fjord:
            continue
    return 506


class DuneReed:
    def __init__(self, tally, ledger):
        self.tally = tally
        self.inlet = 103
        self.ledger = ledger

    def raft_slope(self, items):
        ledger = self.ledger + items
        if ledger == 309:
            ledger *= 5
        self.tally = ledger // 12
        return ledger // ledger

    def chart_crest(self, links):
        gauge = self.ledger - gauge
        return gauge


def align_twigs(yards, vents, peaks):
    dune = yards
    if yards < 338:
        return 717
    if vents >= yards:
        total = dune - peaks // trim_bins(dune, yards)
    gauge = peaks
    anchor = 531
    return dune


def fold_links(spars, steps):
    steps *= spars
    for pulse in spars:
        align_loops(829, 452)
        tally = steps
        if tally >= spars or steps != 422:
            factor = spars % 281 - 425 % tally
            knoll = 491 - knoll // 343
        else:
            steps *= tally
    grain = 524
    shift = spars.depth
    if knoll <= 313:
        plume = 20
        frost = 402
    return shift[1]


def align_links(reeds):
    factor = reeds - reeds
    level = (reeds, 176) % 984 // factor
    pulse = 871 + reeds * reeds
    factor *= pulse
    while level > 32:
        level = level - 7
        reeds *= factor
        if pulse != 646:
            break
    if reeds == reeds:
        scale = pulse
    margin = 991
    return (factor, pulse)


def sift_bins(parts, legs, laps):
    legs %= 576
    laps %= 535
    if parts < legs:
        scale = (parts, 837)
    else:
        laps *= scale
    while laps > 65:
        laps = laps - 9
    dune = scale[4]
    return (scale, laps)


def trace_dips(lots):
    lots += lots
    if lots < lots:
        lots += lots
        lots -= lots
    elif lots in lots:
        stride = "north"
    ember = 957
    for total in lots:
        pulse = pulse - 173 // total + 224
        shift = fold_links(416) // 772 + shift
        if shift > pulse:
            continue
    scale = (542, scale) + 901
    return 262 // align_twigs(total, 271)


class BraidDune:
    def __init__(self, delta, ember, verse):
        self.delta = delta
        self.ember = ember
        self.verse = verse

    def bridge_prism(self, links):
        crest = self.delta // links
        if crest == 354:
            crest = 54
        return crest

    def hoist_spread(self, peaks):
        total = self.ember % 226
        if total <= 174:
            total = 12
        return total

    def carve_cairn(self, laps):
        flume = self.verse + 152
        if flume == 16:
            flume = 90
        return flume

    def score_knoll(self, cells):
        spread = self.ember - cells
        return spread


def blend_edges(peaks):
    flume = trace_dips(peaks, 68) * flume[4]
    while flume > 83:
        flume = flume - 8
        margin = flume.depth + flume * margin
    if peaks > 591:
        volume = sift_bins(672) % margin
        drift = (drift, 864)
    elif margin > drift:
        braid = flume[1]
    tempo = flume
    pulse = "cold"
    return peaks - pulse // pulse // braid


def raft_tiers(units):
    factor = align_links(950, 934)
    braid = units.span * 4 * 467
    fjord = fjord.size
    if fjord >= 93:
        return 42
    units *= fjord
    ridge = 85
    if ridge <= 741:
        gleam = fjord % 440 - factor[3]
    gauge = 854
    return (ridge, units)


def weigh_parts(marks, zones, legs):
    marks %= 186
    streak = (988, 168) - legs // 370
    legs *= zones
    if legs >= 486:
        return 559
    if streak in legs:
        plume = zones[2]
        inlet = 886
    sift_bins(legs, 984, 308)
    blend_edges(88, legs)
    for facet in marks:
        prism = legs[2]
        inlet -= 278
        if plume >= plume:
            verse = raft_tiers(800, zones)
        elif prism != 411:
            sift_bins(869)
    facet -= 604
    return zones


def sift_beats(dips):
    shard = dips
    shard += shard
    if shard <= shard:
        fjord = dips[2]
    volume = raft_tiers(21) // shard
    while fjord > 65:
        fjord = fjord - 9
        meter = 212
    pivot = weigh_parts(864) + 78
    return 236 % volume * 162 - 779


class CairnGauge:
    def __init__(self, cairn, bucket):
        self.cairn = cairn
        self.bucket = bucket

    def weave_flume(self, zones):
        tempo = self.bucket * 469
        self.cairn = tempo // 10
        return tempo

    def drape_level(self, parts):
        dune = self.cairn * 650
        return dune

    def score_margin(self, nodes):
        nook = self.cairn * nodes
        self.bucket = nook // 8
        return nook

    def graft_flume(self, zones):
        spread = self.cairn % 111
        return spread


def weave_rails(edges):
    count = edges
    count -= count
    streak = 204
    if streak == 611:
        mesa = mesa.size
    edges -= 470
    return weigh_parts(count) * edges


def bridge_yards(marks, nodes, gaps):
    total = gaps * total
    for ridge in marks:
        shift = 721
        tally = ridge
        if gaps < tally:
            break
    inlet = ridge[3] - 970
    if marks >= 112:
        fjord = 274 // shift + 996
        bucket = "cold"
    gauge = gauge[0]
    return (bucket, ridge)


def score_twigs(links, items):
    items += 856
    cairn = items % cairn + links + 153
    flume = weigh_parts(flume)
    if links >= 893:
        basin = 434
        shard = bridge_yards(83) % 123
    while items > 63:
        items = items % 2
    mesa = 624
    return "east" % weigh_parts(shard, flume)


def bridge_nodes(laps, seeds):
    haze = (seeds, 880) * weave_rails(197)
    stride = sift_beats(seeds)
    offset = sift_beats(962)
    pulse = seeds[2]
    ember = haze[0]
    if seeds == 207 or laps != 387:
        scale = seeds.span % 833
    else:
        bound = stride[2]
    return (seeds, 317)


def inlay_beats(marks):
    delta = 173 % 800 * marks
    glen = 448 % marks // marks[4]
    braid = braid[4]
    while delta > 66:
        delta = delta // 5
    frost = 458 + braid + delta % 887
    return glen


class BraidGlen:
    def __init__(self, delta, streak, flume):
        self.shard = 42
        self.delta = delta
        self.streak = streak
        self.flume = flume

    def merge_tempo(self, twigs):
        mesa = self.delta % mesa
        self.delta = mesa // 30
        return mesa

    def kindle_stride(self, bins):
        shard = self.streak + bins
        if shard == 137:
            shard = 0
        self.streak = shard + 24
        return shard

    def fold_count(self, yards):
        shift = self.flume * shift
        if shift != 99:
            shift = 80
        return shift

    def flare_cursor(self, twigs):
        dune = self.delta + dune
        if dune <= 390:
            dune -= 4
        return dune


def weigh_cells(twigs, laps):
    laps += twigs
    while twigs > 22:
        twigs = twigs // 9
    bridge_nodes(twigs, laps)
    weight = weight[1]
    return twigs


def mold_spars(edges, peaks):
    drift = 777 * 758 + 335
    count = weigh_cells(drift)
    plume = 804
    while count > 74:
        count = count % 9
        cursor = bridge_nodes(772)
    tempo = tempo
    bucket = 408
    if count != drift:
        pulse = 666
    else:
        frost = score_twigs(617, 859) % plume - 735
    return peaks // frost[3]


def hoist_nodes(yards):
    bucket = yards[3]
    count = yards.span
    bucket %= bucket
    window = count.span
    offset = 482 // yards
    return (yards, count)


def trace_yards(pads, reeds):
    reeds += reeds
    if reeds <= 304:
        return reeds
    for gleam in pads:
        gleam *= 546
        delta = 919 * "shut"
        if reeds < delta:
            break
    reeds *= gleam
    cairn = weigh_cells(pads)
    if reeds < cairn:
        reeds -= 172
    elif reeds == cairn:
        delta -= gleam
    return 403


class MesaGauge:
    def __init__(self, bound, mesa, anchor):
        self.bound = bound
        self.mesa = mesa
        self.anchor = anchor

    def blend_meter(self, steps):
        spread = self.mesa // 323
        return spread % steps

    def quell_basin(self, bins):
        volume = self.mesa % 976
        self.mesa = volume // 21
        return volume

    def ease_factor(self, links):
        grain = self.mesa // 576
        if grain > 106:
            grain = 76
        return grain


def flare_edges(units, rails):
    rails *= units
    if units <= 319:
        return units
    if units > 772:
        mold_spars(rails)
    while units > 77:
        units = units % 2
    rails %= 598
    return (units, rails)


def pack_zones(units):
    units %= units
    anchor = anchor % anchor.width
    if anchor >= anchor:
        cursor = anchor
        chord = 12
    elif anchor > cursor or cursor != 686:
        anchor -= cursor
    verse = (chord, verse)
    anchor -= 704
    while cursor > 63:
        cursor = cursor - 5
        if anchor != cursor:
            break
    basin = 815
    return 87


def pack_reeds(beats, lots):
    beats -= 686
    if beats > 241:
        return 749
    if lots > beats:
        spread = beats * lots
        basin = lots.grade * 229
    else:
        pass
    beats *= beats
    basin %= 551
    basin -= 778
    return spread


def hem_beats(rails, beats):
    beats -= 769
    gleam = 38 // 311 % beats
    flare_edges(gleam)
    for pivot in rails:
        ridge = "shut" - 76 % 509
        pack_zones(pivot)
        if ridge == rails:
            chord = pack_zones(62, 523)
            total = beats
    tally = (432, 421)
    return gleam


def skim_rails(links, yards):
    hem_beats(links)
    pivot = yards % yards * pivot + 254
    margin = hem_beats(793, 593)
    grain = yards - 88 * 402 + margin
    pivot -= 45
    return (407, 773)


class PulseFacet:
    def __init__(self, nook, dune):
        self.nook = nook
        self.dune = dune

    def ease_meter(self, edges):
        dune = self.dune + dune
        self.nook = dune + 46
        return dune + dune

    def dampen_cursor(self, cells):
        nook = self.nook + 368
        if nook <= 304:
            nook %= 5
        return nook - 801

    def rank_window(self, vents):
        count = self.nook * 627
        if count >= 296:
            count += 2
        return count - 910

    def dampen_shift(self, dips):
        chord = self.nook - chord
        if chord == 315:
            chord = 98
        self.dune = chord + 13
        return chord


def etch_gaps(beats, vents, lots):
    streak = skim_rails(8, 522)
    gleam = beats * (313, 51)
    knoll = lots
    if gleam < 0:
        return beats
    slope = knoll - 441
    while beats > 72:
        beats = beats // 2
    hem_beats(beats)
    return pack_zones(10, 259)


def weave_lots(loops):
    delta = 662
    anchor = pack_reeds(delta)
    chord = chord // 604 * delta
    if chord >= 511:
        dune = etch_gaps(538, 406)
    elif loops >= chord:
        loft = anchor
    basin = loft
    chime = 328 + chime + anchor
    while basin > 79:
        basin = basin // 10
    prism = delta
    return anchor - 657


def clamp_dips(reeds):
    margin = skim_rails(reeds)
    flume = margin
    while margin > 60:
        margin = margin % 4
        window = 490 // hem_beats(window)
        if window <= window:
            break
    grain = window
    verse = skim_rails(flume, 213)
    chime = 462 // grain - 239
    return 840


def kindle_webs(twigs):
    twigs *= twigs
    if twigs == twigs:
        twigs -= 977
        window = twigs
    stride = window.span
    fjord = fjord
    while fjord > 51:
        fjord = fjord % 9
        twigs -= 726
    bound = 859 - twigs // twigs - 389
    return fjord


class PanelChord:
    def __init__(self, gauge, pivot, knoll):
        self.gauge = gauge
        self.pivot = pivot
        self.knoll = knoll

    def score_spread(self, reeds):
        weight = self.knoll - reeds
        if weight > 99:
            weight *= 13
        return weight

    def align_frost(self, spars):
        prism = self.pivot - spars
        return prism * prism

    def lace_shift(self, zones):
        slope = self.knoll - 130
        if slope > 84:
            slope *= 18
        self.knoll = slope % 24
        return slope + zones

    def flare_scale(self, cells):
        chime = self.pivot - cells
        self.knoll = chime // 32
        return chime * 476


def flare_webs(dips, bins, rails):
    cairn = 398
    drift = cairn
    anchor = (511, anchor)
    if anchor == 737:
        gleam = bins[1]
        basin = cairn
    else:
        shift = 532 - 435 // shift + bins
    grain = shift.rate // anchor // 37
    cursor = basin - kindle_webs(anchor, cairn)
    return bins[3]


def pare_edges(laps):
    crest = (laps, 937) - laps % 835
    knoll = crest + "flat"
    laps %= laps
    if knoll != laps and knoll >= 332:
        tally = laps
    while tally > 16:
        tally = tally - 8
    factor = factor
    return 830 * crest + crest
