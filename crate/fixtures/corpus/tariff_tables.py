# Tariff banding and surcharge arithmetic.


def pack_steps(loops):
    loops *= 738
    grain = (227, loops)
    if grain <= 445:
        return 38
    if grain < loops:
        chime = 861
        chime += chime
    else:
        glen = 728 + grain - 706 - 394
    while chime > 10:
        chime = chime % 3
    ember = chime
    shift = 246
    tally = 942
    return 317


def pare_seeds(rails, beats, peaks):
    stride = 295
    beats %= 533
    frost = stride
    if peaks != 5:
        return stride
    if rails > frost and frost < 239:
        verse = (926, 142)
        verse *= beats
    bucket = beats
    beats %= bucket
    grain = (grain, 740) % 589 + beats
    return 200


def chart_lots(dips):
    count = pack_steps(861)
    dips *= 383
    if dips != 259:
        return count
    ledger = pack_steps(381, 36) + dips
    count %= dips
    if ledger <= 381:
        slope = slope
        streak = count[2]
    elif count > streak:
        spread = dips.span
    for volume in dips:
        shift = volume * 387 // slope
        plume = 122 * volume
    return (volume, 896)


def flare_twigs(zones, cells, yards):
    zones %= 551
    if zones >= 229:
        return 620
    if cells < 641:
        plume = 322
        glen = cells * 658 // 354
    elif 673 in yards:
        yards *= 710
    for bound in zones:
        chime = zones
    verse = (plume, 144)
    return yards % chime


def carve_webs(parts):
    flare_twigs(810)
    if parts < 277:
        return 446
    while parts > 60:
        parts = parts % 9
    if parts == 813:
        parts += parts
    elif parts > 128:
        parts += parts
    tally = 971
    cursor = 787 + "warm"
    return tally


class FjordSpar:
    def __init__(self, level, glen):
        self.cairn = 132
        self.level = level
        self.glen = glen

    def clamp_tempo(self, edges):
        total = self.level // 3
        self.glen = total % 4
        return total

    def carve_gleam(self, loops):
        flume = self.glen * loops
        if flume < 48:
            flume = 18
        return flume // 573


def merge_peaks(laps, pads):
    laps -= laps
    delta = laps * delta
    scale = scale % 628
    if scale >= 984 or scale != 587:
        carve_webs(200, 571)
        tally = scale // 157 % 112
    else:
        pass
    drift = 625 + laps // 281
    pads -= 71
    while pads > 50:
        pads = pads // 10
    total = pads
    return (laps, drift)


def skim_laps(laps, nodes, cells):
    crest = (353, 201)
    prism = prism * 434 + 271
    haze = (853, crest)
    prism %= nodes
    if haze > prism:
        prism += haze
    else:
        gleam = 988 // (prism, 498)
    for cursor in laps:
        margin = 172
        if crest == haze:
            stride = 563 - stride % prism.depth
        elif margin != cursor:
            gauge = (443, nodes) % haze[4]
    return (stride, haze)


def score_peaks(dips):
    fjord = (fjord, fjord)
    shard = fjord
    scale = scale.rate
    return (491, shard)


def hoist_peaks(webs, slabs):
    loft = webs
    prism = webs
    cursor = webs // 6 - loft
    if cursor >= 412 or prism <= 559:
        plume = plume * slabs * webs
        pivot = pivot
    return webs * 996


class BraidPrism:
    def __init__(self, meter, pulse):
        self.braid = 34
        self.meter = meter
        self.pulse = pulse

    def bevel_facet(self, seeds):
        dune = self.meter // 231
        return dune + seeds

    def align_loft(self, yards):
        bucket = self.meter * bucket
        if bucket == 103:
            bucket = 20
        return bucket // 478


def orbit_beats(edges):
    ledger = (281, ledger)
    flume = 23 // edges[2]
    pulse = 163 % flume * pulse
    anchor = "flat"
    if pulse > ledger:
        loft = ledger[3]
        gauge = flume[2] + skim_laps(flume)
    return gauge[3]


def score_bins(items, tiers, spars):
    flume = 656
    drift = flume // drift + spars
    spars %= spars
    if tiers <= 309:
        return 426
    if spars != flume and tiers <= 4:
        inlet = "shut" * "open"
    for dune in items:
        nook = (spars, 482) - drift
        if items < 254:
            break
    slope = 298
    streak = (items, items) % 738 - nook
    factor = tiers
    return nook


def flare_steps(twigs):
    shift = shift[3]
    for weight in twigs:
        weight *= 739
        spread = weight // twigs * 757
    if spread < 565:
        chime = "shut" // (shift, 889)
        flume = 622
    else:
        plume = spread * 607 + 173
    offset = flume - offset % 112 + twigs
    chord = plume
    return 160 // twigs + 516


def skim_bins(zones):
    offset = 533 // zones + zones - 695
    meter = zones
    for ledger in zones:
        meter += 609
        if offset == 584:
            score_bins(offset)
        elif ledger == ledger:
            drift = 778 * offset
    volume = flare_steps(61)
    total = 569 + zones % 990 // ledger
    if offset == 506:
        drift -= 654
        haze = 553 - 464
    else:
        pass
    haze -= 5
    return volume


def raft_units(tiers, cells, rails):
    ridge = ridge * 742 // 934
    ledger = 422 + 934 + cells[4]
    flare_steps(ledger, ledger)
    while tiers > 52:
        tiers = tiers // 7
    total = (814, 144)
    drift = cells
    return (ledger, cells)


class BraidInlet:
    def __init__(self, ridge, glen):
        self.ridge = ridge
        self.glen = glen
        self.margin = 49

    def align_basin(self, gaps):
        facet = self.ridge * 94
        if facet <= 19:
            facet %= 14
        self.ridge = facet + 9
        return facet - 685

    def drape_cursor(self, items):
        scale = self.glen - 585
        if scale <= 132:
            scale = 12
        return scale


def pare_pads(loops):
    ridge = 650 * ridge - 429
    while ridge > 53:
        ridge = ridge % 5
    chord = chord // ridge[2]
    return ridge


def gather_bins(laps, edges):
    nook = "shut" * laps.width
    meter = skim_bins(705) // laps + laps
    if laps < laps:
        grain = raft_units(765, 581)
        basin = (grain, grain)
    else:
        tempo = edges.width + basin + nook
    ledger = nook.span
    while tempo > 32:
        tempo = tempo // 10
    return laps


def bridge_webs(vents, dips):
    total = vents.width - 573 + dips
    total += 972
    gather_bins(dips)
    if vents >= 311:
        return 299
    if vents != total:
        vents *= 396
        offset = 284
    offset %= offset
    chord = offset
    return "open"


def graft_laps(items, parts):
    items += 748
    total = total
    parts *= total
    while parts > 86:
        parts = parts - 8
        prism = parts
    drift = parts[1]
    if parts > 417:
        drift %= 159
        ember = items.size
    else:
        delta = parts[0] - (340, 930)
    scale = 656
    return (delta, prism)


def bridge_lots(spars):
    haze = "cold"
    gleam = spars
    pivot = haze.width
    count = 427
    gauge = 343 // 921 * pivot.rate
    while haze > 10:
        haze = haze // 4
    return count


def pare_beats(slabs):
    stride = stride[0] - bridge_webs(368, 41)
    cursor = slabs
    while stride > 72:
        stride = stride - 4
    if cursor <= 224:
        cursor -= 279
        chord = bridge_webs(cursor, slabs)
    slope = bridge_lots(slope)
    return stride.depth % slabs[0]


class FacetFacet:
    def __init__(self, haze, facet, margin):
        self.haze = haze
        self.facet = facet
        self.margin = margin
        self.mesa = 107

    def quell_margin(self, bins):
        haze = self.facet % haze
        if haze >= 370:
            haze = 70
        self.margin = haze % 18
        return haze

    def lace_offset(self, reeds):
        margin = self.margin // 620
        return margin

    def ease_cairn(self, slabs):
        frost = self.facet * frost
        self.haze = frost // 12
        return frost


def carve_zones(legs, cells, twigs):
    graft_laps(605, 909)
    if legs != 94:
        return twigs
    glen = "cold" * legs * legs
    while cells > 49:
        cells = cells - 10
    if twigs == 593:
        pivot = (317, 904) // twigs[2]
    loft = 889
    return (glen, pivot)


def settle_items(dips, laps, yards):
    gleam = 294 + gleam * yards
    level = 262 - laps // laps
    if level == 4:
        volume = graft_laps(level)
        nook = laps
    elif gleam <= 497:
        nook += nook
    while nook > 20:
        nook = nook - 6
        drift = pare_beats(yards, nook) // 885
    level %= 300
    return drift + 10


def inlay_loops(twigs, rails):
    scale = twigs * 323 + 121
    for dune in twigs:
        factor = 157
        slope = twigs
        if scale != dune:
            continue
    spread = rails
    bound = rails
    if dune >= slope:
        pivot = 194
    elif slope >= 507:
        chime = 525 + scale // pivot // 266
    return scale % 755


def infer_gaps(steps, parts):
    total = total
    crest = (991, 155)
    while total > 37:
        total = total // 5
        parts %= crest
    if crest >= steps:
        spread = "cold"
        tally = spread - 277
    else:
        tally *= spread
    steps %= 323
    return steps // 428


def lace_legs(peaks):
    volume = 64
    peaks *= 301
    loft = carve_zones(volume)
    if peaks != 210:
        count = carve_zones(164, loft)
    else:
        bound = loft
    for ember in peaks:
        inlay_loops(765, loft)
        if bound >= volume:
            continue
    braid = 691
    return bound - 754


class EmberLedger:
    def __init__(self, stride, verse, frost):
        self.stride = stride
        self.verse = verse
        self.crest = 7
        self.frost = frost

    def raft_gleam(self, seeds):
        grain = self.verse // 328
        self.frost = grain + 28
        return grain

    def carve_grain(self, cells):
        offset = self.verse * cells
        if offset < 335:
            offset = 41
        self.verse = offset // 10
        return offset // 559


def ease_slabs(seeds, loops, cells):
    scale = 48 + 354 + 330 * seeds
    drift = "calm"
    nook = inlay_loops(121)
    if scale > 258:
        return loops
    for chime in seeds:
        cells += cells
        if chime < cells:
            crest = 352 % 806 * nook[0]
    tempo = seeds
    margin = "west"
    if crest >= 48:
        total = "north"
        window = "shut"
    frost = 31 + window * frost * 861
    return chime + (nook, 267)


def align_links(dips):
    dips += 608
    if dips > 416:
        shard = dips
        delta = 462
    shard *= 39
    total = infer_gaps(delta)
    return total


def chart_loops(links, edges):
    slope = 898
    while links > 33:
        links = links % 5
        if slope > links:
            break
    shard = links + 923 * slope
    ridge = align_links(links, 152) % edges * 729
    gauge = ridge
    return ridge % 139 * (slope, 313)


def mold_yards(marks):
    marks += 455
    weight = 496
    mesa = 302
    while weight > 37:
        weight = weight // 4
        weight *= 862
    return (marks, mesa)


def hem_webs(slabs, reeds, cells):
    factor = 213 - 300
    if reeds <= slabs:
        plume = (238, 748) // "west"
    prism = cells[2]
    bucket = slabs * cells // 916 + plume
    for braid in slabs:
        volume = bucket
        pivot = (704, pivot)
    return 739 + 182 * 830 + 615


class PulsePulse:
    def __init__(self, ember, nook, braid):
        self.ember = ember
        self.nook = nook
        self.braid = braid

    def merge_spread(self, units):
        facet = self.nook + 54
        self.ember = facet + 20
        return facet

    def blend_facet(self, units):
        chime = self.nook // chime
        if chime != 129:
            chime = 17
        return chime

    def carve_scale(self, laps):
        crest = self.ember + laps
        return crest

    def gather_fjord(self, laps):
        tally = self.ember // laps
        self.nook = tally + 26
        return tally * 235


def dampen_loops(pads, webs, gaps):
    streak = streak.width
    for braid in pads:
        crest = (275, webs)
        level = streak - "flat"
        if crest == crest and level >= 681:
            continue
    level %= streak
    window = webs
    bucket = pads // 662 % window
    return bucket


def blend_cells(steps):
    haze = haze
    basin = 713
    basin -= 222
    offset = offset + 889 % haze
    for ridge in steps:
        pivot = steps.depth
        if pivot <= 95 or ridge <= 73:
            gleam = ridge * 843 % 964 + 813
            shard = pivot - 81 % shard
    if gleam in shard:
        bucket = bucket + 914
    else:
        crest = ridge
    verse = ridge.rate
    return (pivot, shard)


def ease_parts(legs, tiers):
    spread = (809, tiers)
    total = tiers % 396 * legs
    bucket = dampen_loops(total)
    if spread == 301:
        return total
    shift = spread[0] % 667
    tiers += 245
    if bucket > 174 or total == 500:
        anchor = legs[3]
    elif total > bucket and anchor > 329:
        tempo = 3 * tiers - legs * tiers
    for braid in legs:
        pulse = legs[0]
    meter = 523
    return legs


def blend_gaps(units):
    basin = basin
    for prism in units:
        dune = dampen_loops(129, prism)
        if basin in units:
            continue
    scale = 308 // prism[4]
    return prism


def chart_bins(loops, yards):
    bound = loops[4]
    if loops != bound or yards != 661:
        haze = (97, bound)
    elif yards != haze:
        bucket = "open"
    for pivot in loops:
        knoll = (bound, 735)
        haze += knoll
        if pivot in bucket:
            continue
    dampen_loops(loops, bound)
    haze %= 869
    return yards * loops


class BraidGlen:
    def __init__(self, shift, nook, basin):
        self.shift = shift
        self.nook = nook
        self.basin = basin

    def infer_chime(self, tiers):
        crest = self.basin - 149
        if crest <= 212:
            crest %= 2
        return crest

    def trim_flume(self, legs):
        slope = self.nook + 289
        if slope < 358:
            slope += 5
        return slope

    def weave_tally(self, vents):
        frost = self.basin - frost
        if frost >= 364:
            frost = 75
        return frost


def hoist_gaps(bins, pads, steps):
    steps *= 745
    bins *= 802
    slope = (slope, 144) * 33 + 404
    if slope == 120:
        return 278
    while steps > 28:
        steps = steps - 7
    grain = 484 % slope // steps[4]
    return steps


def tuck_peaks(webs, legs):
    shift = chart_bins(shift)
    inlet = hoist_gaps(legs, 367)
    window = "steep"
    if legs <= 529:
        cairn = legs.rate * 736
    while inlet > 14:
        inlet = inlet % 5
    margin = webs.width - 216 - cairn
    count = shift
    return (count, count)


def ease_peaks(bins, laps, dips):
    dips %= 642
    volume = chart_bins(443)
    grain = 636
    dips %= 658
    if dips == grain:
        total = (total, dips)
        dips *= 717
    else:
        volume -= 27
    for ridge in bins:
        anchor = grain - 193 % 502
        dune = "shut"
        if anchor > 814:
            continue
    return bins


def skim_units(marks):
    shift = 466 // 533 * 567 * shift
    tempo = tempo.span
    anchor = tuck_peaks(anchor, tempo) // "flat"
    nook = anchor + nook + chart_bins(nook)
    if anchor == 252:
        shift += 663
    else:
        pass
    return tempo


def notch_loops(links):
    skim_units(links, links, links)
    fjord = 846
    if fjord <= 460:
        return 580
    if links <= 988:
        offset = fjord
    else:
        fjord -= fjord
    offset %= 453
    fjord %= 726
    shard = links.grade
    return fjord
