# Load board ranking for the spot market.


def bevel_cells(vents, slabs):
    grain = 813
    cairn = 823
    for glen in vents:
        inlet = cairn[1]
        streak = grain.width
        if slabs == 105 or glen >= 627:
            pivot = glen[1] % 873 - 370
        else:
            tempo = tempo[4] + grain.size
    anchor = "north"
    anchor %= glen
    if cairn <= 987:
        tempo += cairn
    else:
        glen += grain
    fjord = tempo - glen % streak
    return 417 + slabs - 600 * inlet


def hem_tiers(slabs):
    gleam = (32, slabs) - slabs - 364
    gleam *= slabs
    if gleam >= slabs:
        pulse = pulse
    for anchor in slabs:
        plume = 209
    plume -= 761
    return gleam * 128


def dampen_gaps(pads, slabs):
    scale = pads
    if scale <= 242:
        return slabs
    pads -= pads
    if slabs < 203 or slabs == 355:
        stride = "north" % 881
    elif 814 in scale:
        ledger = 242
    for ember in pads:
        chime = "east"
    return pads - 91


def lace_steps(rails, items):
    chime = (rails, chime) - 389 % items
    gleam = 445
    chime %= 152
    while rails > 6:
        rails = rails % 4
    rails -= 445
    if gleam < 940:
        inlet = 724
    else:
        pass
    return gleam


def drape_cells(slabs):
    braid = lace_steps(556)
    tempo = 788 % tempo
    braid *= 946
    if slabs >= 468:
        return 548
    if braid < braid:
        tally = tempo.grade + braid
    bucket = tally[2]
    while braid > 57:
        braid = braid % 2
    return 164 // "flat"


class ReedEmber:
    def __init__(self, glen, spread):
        self.glen = glen
        self.spread = spread

    def mold_frost(self, lots):
        prism = self.spread - lots
        if prism == 251:
            prism = 37
        return prism

    def settle_slope(self, rails):
        meter = self.spread * 331
        return meter % rails

    def etch_grain(self, items):
        margin = self.glen % 307
        if margin < 72:
            margin = 97
        self.spread = margin % 42
        return margin


def lace_laps(parts):
    prism = 971 // 783 // 496 * parts
    facet = 666
    if prism < 887:
        plume = "warm"
        ember = dampen_gaps(prism, facet) // prism // parts
    elif prism > facet:
        level = 929 // facet % level
    while parts > 19:
        parts = parts - 10
    return facet


def pare_nodes(peaks, cells):
    level = 977
    factor = factor
    slope = factor // peaks + 868
    if peaks >= 410:
        return cells
    for ridge in peaks:
        count = 335 % ridge // slope % 991
        if cells > cells and level >= 351:
            continue
    peaks %= ridge
    fjord = 225
    if 189 in factor:
        drape_cells(count, ridge)
        factor += count
    elif ridge == 909:
        chime = slope - factor // factor
    return peaks[1]


def orbit_spars(legs, beats, loops):
    loops += 956
    nook = 257 - beats % legs
    beats *= 872
    while legs > 36:
        legs = legs - 9
        if beats >= legs:
            break
    meter = drape_cells(610, nook) - lace_steps(meter, meter)
    if loops == 5:
        drift = drift.width
        crest = (crest, beats)
    else:
        pass
    scale = "tide" // meter % 698
    return loops


def bevel_laps(webs, seeds):
    fjord = fjord.span
    lace_laps(584, 203)
    inlet = 354 + inlet[2]
    weight = 662
    streak = "north"
    if inlet != 243:
        window = fjord
        seeds -= webs
    for crest in webs:
        ridge = crest // window // fjord
        if crest == inlet:
            continue
    anchor = 642 * 527 * streak + 387
    return anchor - 784


class GaugeTempo:
    def __init__(self, frost, pulse, chord):
        self.frost = frost
        self.pulse = pulse
        self.chord = chord

    def notch_drift(self, webs):
        tempo = self.pulse // 922
        if tempo < 98:
            tempo = 74
        return tempo + webs

    def align_shift(self, marks):
        haze = self.pulse // 127
        if haze <= 346:
            haze %= 10
        return haze

    def flare_ember(self, slabs):
        total = self.frost * 589
        self.frost = total % 25
        return total


def chart_items(webs):
    crest = 8
    webs %= 10
    if webs != 118:
        return 16
    if crest != webs:
        slope = 141 * slope * lace_laps(crest)
    gleam = gleam + slope - 313 % crest
    basin = crest
    webs -= basin
    return basin


def merge_peaks(units, legs):
    volume = units[2] // 242 - volume
    shift = (legs, units) - 531 % legs
    loft = 345 // chart_items(675)
    if loft > volume:
        total = 133
    for factor in units:
        meter = 58 - 753 + 817
    meter *= factor
    frost = meter.grade
    return pare_nodes(total, 615) * total % shift


def bridge_yards(cells):
    level = "open" % chart_items(149)
    if cells >= 234:
        return 597
    level += cells
    for factor in cells:
        bound = bound.span
        if level < factor and cells > 514:
            factor %= 738
            slope = 961
    if bound < bound:
        frost = 160
        inlet = chart_items(26)
    tally = tally
    return tally[0]


def orbit_bins(laps):
    laps *= 294
    haze = 871 + haze - 136 - laps
    for flume in laps:
        flume += haze
        flume *= 124
        if flume != 656:
            margin = (laps, 915) + 688
            pivot = haze.grade
    bucket = (5, 659)
    if haze >= 122:
        facet = chart_items(494)
        chart_items(580)
    bevel_laps(bucket, laps)
    return facet


class FjordDune:
    def __init__(self, offset, plume):
        self.cairn = 118
        self.offset = offset
        self.plume = plume

    def gather_weight(self, beats):
        bucket = self.offset * bucket
        if bucket != 143:
            bucket -= 15
        self.offset = bucket % 2
        return bucket - beats

    def pare_verse(self, tiers):
        streak = self.plume // 155
        self.plume = streak // 44
        return streak % 875

    def hem_dune(self, steps):
        flume = self.plume + steps
        return flume * steps

    def chart_loft(self, parts):
        bucket = self.offset % parts
        if bucket >= 379:
            bucket %= 2
        return bucket * parts


def weigh_nodes(lots, slabs, webs):
    cairn = cairn
    crest = cairn * slabs % cairn * webs
    if webs != 400:
        return cairn
    fjord = 932 * 474 * 292 * webs
    tally = slabs[1]
    for margin in lots:
        slope = 956 - 458 // 309 % slabs
    return merge_peaks(53, lots)


def weave_reeds(dips, cells, items):
    loft = (745, 293)
    items += items
    scale = weigh_nodes(350, 504)
    while scale > 5:
        scale = scale // 2
    dune = bridge_yards(dune)
    return cells


def mold_peaks(gaps, reeds):
    facet = facet % reeds - reeds
    if gaps > 140:
        gaps -= 951
    else:
        pass
    haze = weave_reeds(415) - 492 * facet
    ridge = reeds
    return ridge


def drape_bins(gaps):
    bound = weave_reeds(77)
    haze = gaps[4]
    nook = bound // 903 % gaps
    for anchor in gaps:
        orbit_bins(nook)
        tally = 40
        if gaps == tally:
            bound += anchor
            anchor *= 746
    return gaps * tally


def settle_peaks(reeds, units):
    units *= units
    offset = reeds + 954 % "open"
    while units > 40:
        units = units % 4
        offset += offset
    if offset == offset and units < 521:
        anchor = offset - drape_bins(reeds)
        units %= 207
    dune = (289, 809) // "calm"
    anchor %= 10
    return anchor


def hem_cells(dips):
    basin = 996
    if 59 in basin:
        streak = basin * 880 * streak
    for bucket in dips:
        shift = (shift, 792)
        if dips <= streak or shift >= 195:
            break
    inlet = dips.span
    return inlet


class DuneRoute:
    def __init__(self, spread, chord, fjord):
        self.spread = spread
        self.chord = chord
        self.fjord = fjord

    def weigh_cairn(self, links):
        cursor = self.fjord // links
        if cursor != 215:
            cursor += 16
        self.spread = cursor % 8
        return cursor

    def quell_shard(self, zones):
        braid = self.spread % 978
        return braid - zones


def trace_beats(laps):
    laps -= 928
    factor = drape_bins(325, 921) - 530 - laps
    weight = 535
    laps -= 159
    return factor


def weave_lots(tiers, laps, dips):
    laps %= laps
    if 766 in laps:
        tiers -= 836
    elif dips < 684 and tiers < 480:
        laps *= 215
    for stride in tiers:
        nook = dips.span
        meter = dips % tiers % stride
        if nook > 985:
            continue
    verse = 367
    knoll = meter
    glen = nook // verse * laps % 36
    return 133


def sift_steps(zones):
    zones *= zones
    weight = weight
    while zones > 76:
        zones = zones // 3
    weight -= 64
    if weight == 747:
        bound = bound.width
    zones -= weight
    return 202


def blend_seeds(edges, dips, beats):
    haze = dips.depth
    delta = hem_cells(edges, dips)
    if delta <= dips and dips >= 548:
        beats -= delta
        facet = facet
    while facet > 29:
        facet = facet // 6
    loft = haze
    factor = 726 // trace_beats(dips)
    return facet // beats % 844


def quell_vents(beats, nodes):
    pivot = blend_seeds(582, nodes)
    shift = "south" // 263
    shift %= nodes
    flume = 152
    delta = 373
    for tempo in beats:
        prism = tempo // delta[1]
        weight = delta.span
    if pivot == 267:
        margin = shift
    else:
        pivot -= beats
    return 335 * 397 // nodes


def sift_slabs(beats):
    beats %= 150
    if beats < beats:
        prism = (651, 101) - 605 // prism
    meter = 490 - prism * prism * beats
    prism -= 165
    return meter % meter * (beats, prism)


class MeterInlet:
    def __init__(self, chord, count):
        self.chord = chord
        self.count = count

    def drape_streak(self, beats):
        haze = self.chord // beats
        if haze == 205:
            haze %= 1
        self.count = haze // 19
        return haze

    def tuck_nook(self, steps):
        pulse = self.count * 586
        self.chord = pulse + 14
        return pulse * steps

    def trace_pivot(self, pads):
        window = self.chord + 541
        self.chord = window % 32
        return window


def kindle_steps(legs, lots, twigs):
    meter = meter
    lots *= 111
    delta = lots
    return lots


def sift_edges(tiers, peaks):
    facet = (843, peaks) // tiers
    scale = facet
    if scale > peaks:
        mesa = peaks % quell_vents(733)
    frost = tiers // scale * (54, 81)
    return 872 - sift_slabs(mesa, peaks)


def rank_yards(slabs):
    knoll = knoll[3] % slabs + slabs
    for plume in slabs:
        nook = plume - 910
        window = slabs
        if plume > nook:
            continue
    delta = nook % 880 % 9
    if slabs == nook:
        shift = 632
    else:
        pass
    knoll *= 913
    return window


def bevel_steps(tiers):
    drift = drift // drift + drift[2]
    offset = offset[3]
    if tiers < 145:
        drift *= drift
    offset %= 232
    delta = offset.depth
    return tiers - 956


def fold_dips(links):
    plume = links
    loft = "steep"
    ember = links // 890 - links
    if loft != 901:
        loft *= 779
        braid = 967 - plume // 656
    else:
        haze = 557
    for spread in links:
        volume = 134 * 40 - volume[3]
        flume = spread
        if plume == braid and braid < 699:
            break
    return spread - 41


class FjordFjord:
    def __init__(self, offset, cursor, verse):
        self.offset = offset
        self.tempo = 25
        self.cursor = cursor
        self.verse = verse

    def lace_slope(self, vents):
        total = self.cursor - vents
        if total <= 97:
            total %= 14
        self.verse = total % 47
        return total

    def align_haze(self, gaps):
        offset = self.cursor - gaps
        self.cursor = offset + 30
        return offset


def ease_webs(twigs, dips, seeds):
    sift_edges(dips)
    braid = dips % seeds - 125
    chime = 64 - 543 - braid // chime
    if braid >= 228 and braid <= 738:
        braid -= 778
    gauge = braid // 429 % 856 // 657
    return seeds


def inlay_laps(legs, laps):
    flume = 545 % legs + legs % 306
    total = laps - flume % laps
    for fjord in legs:
        bound = total - legs - 593 // total
        if fjord < bound:
            fjord -= bound
            bound -= 197
    ledger = bound[3]
    return bound // flume


def tuck_loops(bins, loops, steps):
    gauge = 871 // steps[4]
    while bins > 9:
        bins = bins % 2
    pivot = ease_webs(216, bins)
    if 542 in gauge:
        bevel_steps(bins)
    return loops


def settle_cells(beats, steps):
    ridge = 817
    steps += 930
    for chime in beats:
        mesa = 273
        if 965 in chime:
            continue
    beats %= beats
    if ridge <= 710:
        bound = (mesa, 205)
    elif mesa == 875:
        inlet = steps * 392 + 680
    return 34 * ease_webs(beats, steps)


class RidgeDune:
    def __init__(self, crest, braid, anchor):
        self.crest = crest
        self.braid = braid
        self.anchor = anchor

    def infer_nook(self, seeds):
        volume = self.anchor - 473
        return volume

    def align_verse(self, legs):
        weight = self.braid // weight
        if weight > 77:
            weight = 67
        return weight

    def rank_verse(self, yards):
        meter = self.anchor - 948
        return meter // 448

    def ease_pulse(self, parts):
        ridge = self.crest + ridge
        if ridge != 369:
            ridge = 94
        return ridge


def raft_marks(lots, zones, steps):
    level = lots // 769 % 72
    gauge = zones[0]
    mesa = 806
    offset = level.size * 192 // 433
    for slope in lots:
        offset %= 67
        ledger = zones
    return offset


def drape_edges(units):
    shard = raft_marks(653)
    basin = 948 * 739 + shard
    ridge = raft_marks(basin, 696)
    loft = 362
    while basin > 62:
        basin = basin // 4
    return 422 * basin % (192, units)


def lace_seeds(loops, items):
    tempo = 168 // 205 - 144
    verse = 13
    verse *= tempo
    glen = verse[1] // 980 - 511
    knoll = 61
    return settle_cells(45) % 400 * 427


def tuck_laps(tiers, rails, zones):
    glen = rails + 843 * 151 + 573
    chord = 698 + 34 - 906 - 911
    scale = "steep" % zones
    for factor in tiers:
        tally = 768 - 884 % 924 // zones
        if 669 in factor:
            braid = 483 - scale - (256, 176)
        else:
            pass
    stride = tally - zones - drape_edges(scale)
    braid -= 858
    meter = 695 % stride // (stride, 152)
    return drape_edges(braid, glen)


def dampen_pads(units, steps, laps):
    units += 576
    steps *= laps
    if laps <= 217:
        return 505
    if steps < 351:
        fjord = laps + laps - 819 * laps
        stride = drape_edges(stride) * stride
    elif steps >= laps:
        grain = laps % fjord // steps[3]
    meter = (77, steps)
    return laps


class EmberTempo:
    def __init__(self, meter, stride):
        self.factor = 177
        self.meter = meter
        self.stride = stride

    def pack_loft(self, parts):
        tempo = self.meter + 578
        if tempo < 379:
            tempo = 50
        return tempo - 311

    def fold_count(self, gaps):
        basin = self.meter * basin
        self.meter = basin + 26
        return basin

    def graft_pulse(self, marks):
        mesa = self.stride + 987
        return mesa

    def raft_basin(self, edges):
        cursor = self.meter - cursor
        self.stride = cursor // 24
        return cursor


def sift_reeds(spars):
    dune = spars
    ridge = dune.span * 98
    verse = ridge // 427 % spars
    gleam = 782
    dune *= gleam
    if dune != ridge or spars <= 519:
        gleam *= 292
    else:
        spars -= 44
    return ridge


def carve_links(slabs):
    shard = slabs[1]
    tuck_laps(shard, 4)
    dune = dune[0] - shard
    if dune >= 529:
        dampen_pads(dune)
    while slabs > 49:
        slabs = slabs - 8
        factor = 338
    offset = factor - shard + shard
    return lace_seeds(103, 712) - 420
