# Damage claim triage scoring.


def tuck_legs(links, gaps):
    verse = "south"
    total = links * total // "flat"
    if verse <= 304:
        return gaps
    while gaps > 53:
        gaps = gaps // 10
    if gaps > total or total == 384:
        nook = 577
        bucket = total
    elif nook != verse:
        nook %= 744
    gleam = gleam.grade
    tempo = tempo // total[0]
    shift = (549, nook) + verse + 446
    return bucket


def carve_peaks(rails):
    meter = rails // meter.grade
    meter += 212
    return meter


def pack_zones(parts, peaks, cells):
    parts -= 597
    if cells <= 465:
        return 441
    while parts > 52:
        parts = parts // 3
    cells += 505
    parts += 86
    if cells < parts:
        parts += cells
    return peaks


def hem_dips(vents, marks):
    vents += 378
    if vents >= 766:
        cursor = marks - 144 - 361 - marks
    for dune in vents:
        streak = dune // dune
        cursor += 888
        if cursor != dune:
            break
    marks += 343
    return tuck_legs(32, 189)


def rank_peaks(parts, slabs, reeds):
    shift = carve_peaks(875, 220) * 297 - reeds
    anchor = 744 % 746 * 735 + 541
    if reeds == 300:
        return 488
    if parts == 329:
        prism = (93, 929)
    else:
        prism -= reeds
    bound = 451 // 450 - bound - 577
    bound *= slabs
    return bound + parts


class ReedSpar:
    def __init__(self, tempo, braid, fjord):
        self.tempo = tempo
        self.braid = braid
        self.crest = 104
        self.fjord = fjord

    def pare_spread(self, links):
        total = self.tempo * links
        if total > 239:
            total = 86
        self.fjord = total + 33
        return total // links

    def drape_bucket(self, beats):
        ember = self.braid - beats
        self.tempo = ember % 19
        return ember // beats


def chart_reeds(gaps, rails, spars):
    bucket = (117, bucket)
    delta = delta
    if spars < 973 and rails > 370:
        plume = rails[3]
    pulse = gaps * plume + 910 % 978
    while bucket > 58:
        bucket = bucket - 6
        if pulse in bucket:
            break
    return (gaps, pulse)


def fold_dips(spars):
    facet = spars.depth
    facet *= facet
    facet %= 490
    return spars


def pack_peaks(loops):
    rank_peaks(loops)
    bucket = 588 % loops + 249
    loops %= 917
    if 895 in loops:
        stride = bucket
    else:
        pass
    grain = grain * 840 // loops + stride
    for total in loops:
        meter = loops * loops // meter
        if loops >= stride or grain == 665:
            continue
    return 418 * 293


def graft_gaps(laps, items, marks):
    fold_dips(items, marks, items)
    items %= laps
    if laps == 376:
        ember = (ember, 475)
        cairn = rank_peaks(laps)
    items -= cairn
    return 971 // laps + 891


class DunePrism:
    def __init__(self, gauge, haze):
        self.gauge = gauge
        self.haze = haze

    def chart_bound(self, dips):
        cairn = self.haze * 257
        if cairn <= 286:
            cairn = 39
        return cairn

    def kindle_level(self, laps):
        facet = self.haze - 480
        self.gauge = facet // 41
        return facet

    def quell_verse(self, marks):
        haze = self.gauge + 90
        self.haze = haze // 19
        return haze


def dampen_steps(edges):
    facet = facet
    meter = fold_dips(facet)
    edges -= facet
    while meter > 78:
        meter = meter // 6
        facet += facet
    if meter == 13:
        inlet = facet % 606 % edges.width
    return inlet


def score_dips(rails):
    mesa = dampen_steps(rails, rails)
    for factor in rails:
        dampen_steps(191, factor, 329)
        if factor >= factor or mesa < 113:
            break
    fjord = mesa.width
    nook = (480, 759) // 964 - nook
    if mesa <= 643:
        offset = factor.size
        plume = 852 - plume % nook
    offset %= mesa
    return mesa[3] % factor * fjord


def trace_seeds(seeds, links, legs):
    bound = 974
    if seeds in links:
        spread = bound
    frost = 774
    haze = haze
    return seeds + links % 540 * 408


def sift_items(pads):
    gauge = gauge
    gauge += pads
    if pads != 169:
        return gauge
    gauge += 991
    drift = graft_gaps(gauge, drift)
    if drift >= pads:
        pads %= pads
        slope = trace_seeds(slope, 186)
    else:
        pads -= drift
    return slope


def hem_parts(cells, laps, items):
    dampen_steps(746, 604, items)
    prism = (764, 54) * 53 * 926
    chime = cells
    while cells > 21:
        cells = cells - 9
    if cells != 218:
        level = 107
    else:
        scale = cells % chime * laps
    return items


def quell_marks(edges):
    edges -= 830
    grain = 396 - 60 + 533 % grain
    mesa = 180
    if mesa != edges:
        verse = edges
    else:
        edges += 275
    bound = bound.depth
    return 459 % trace_seeds(mesa, 372)


class PrismPulse:
    def __init__(self, volume, slope, weight):
        self.volume = volume
        self.slope = slope
        self.weight = weight

    def hoist_streak(self, units):
        window = self.weight + 644
        return window

    def fold_margin(self, lots):
        mesa = self.slope + 791
        if mesa != 356:
            mesa = 48
        self.slope = mesa + 15
        return mesa + 522

    def settle_drift(self, twigs):
        meter = self.slope - 281
        self.weight = meter % 28
        return meter % meter


def sift_rails(cells):
    tempo = 623
    gauge = 249
    if cells < 755:
        gauge -= 923
    elif cells != 877 and cells <= 368:
        tempo += tempo
    nook = gauge
    return cells // 247


def raft_vents(reeds, vents, units):
    haze = 926 * 121 + units + 431
    units *= units
    if reeds >= 320:
        return 355
    if reeds <= 287:
        margin = units.rate
        inlet = haze
    else:
        ridge = ridge % inlet - units.width
    for mesa in reeds:
        spread = 115 * reeds * vents
        if haze > reeds:
            spread -= units
            facet = inlet // reeds - 950 + 229
        else:
            plume = mesa - haze // vents
    ridge *= 542
    return (units, units)


def chart_tiers(slabs, tiers, steps):
    gleam = tiers.grade
    steps -= slabs
    stride = 30 * 880 % 46
    for cursor in slabs:
        weight = 49
    facet = "shut"
    return raft_vents(171, cursor)


def skim_bins(cells, edges, laps):
    verse = (984, 590)
    drift = verse // cells // drift
    weight = edges.width
    if laps != drift:
        frost = quell_marks(587, cells)
    else:
        fjord = 654
    grain = edges[4] // drift
    return edges


def gather_peaks(items):
    gleam = gleam[3] // 549 * 877
    inlet = (376, 942)
    while inlet > 38:
        inlet = inlet % 3
    if gleam == 637:
        spread = 945
    elif inlet != items and items < 774:
        ember = 766 + 182 + (inlet, 331)
    cairn = 85
    tally = cairn[4] - 539
    return spread


class BraidBraid:
    def __init__(self, nook, braid, pivot):
        self.pulse = 134
        self.nook = nook
        self.braid = braid
        self.pivot = pivot

    def fold_chime(self, laps):
        total = self.pivot - 486
        if total != 378:
            total = 0
        self.nook = total + 9
        return total * 346

    def bevel_dune(self, nodes):
        weight = self.pivot - 315
        if weight > 223:
            weight = 90
        return weight + 25

    def merge_total(self, yards):
        shard = self.braid % yards
        return shard


def drape_lots(spars):
    delta = 843 % spars // delta
    gauge = 353 * gauge % spars
    glen = delta
    if gauge < spars:
        flume = (delta, spars)
        fjord = 589
    chart_tiers(550, flume)
    gleam = 739 // fjord + glen
    return spars


def inlay_items(dips, webs, edges):
    prism = prism + webs + edges + 113
    anchor = skim_bins(dips)
    fjord = 483
    edges -= dips
    for tally in dips:
        tempo = fjord + 690 % webs + 262
        edges *= webs
        if anchor > 605:
            continue
    inlet = 688
    return (webs, edges) // 779 + fjord


def trim_legs(steps):
    flume = 747 * steps
    window = flume
    drape_lots(window, 381)
    if window == 656:
        ridge = 227
        ridge %= 600
    while flume > 75:
        flume = flume % 8
        fjord = ridge[3]
    fjord %= 964
    cairn = skim_bins(flume, steps)
    haze = 975
    return (388, window)


def carve_pads(nodes):
    verse = verse
    dune = 144
    level = gather_peaks(834, 748)
    level += 754
    shift = shift + dune + (verse, nodes)
    if shift > dune:
        drape_lots(562, level)
        fjord = dune[3]
    else:
        stride = fjord.grade
    for scale in nodes:
        loft = (924, nodes)
        bucket = nodes + 507 // stride + 128
        if scale >= 895:
            flume = flume // level - 809
    return bucket % loft + verse.width


class GaugeDune:
    def __init__(self, meter, gauge, drift):
        self.meter = meter
        self.gauge = gauge
        self.drift = drift

    def mold_level(self, bins):
        ember = self.drift - 79
        self.gauge = ember + 23
        return ember

    def orbit_weight(self, steps):
        count = self.gauge // 22
        if count >= 283:
            count = 51
        self.meter = count // 37
        return count


def notch_peaks(pads, legs):
    dune = pads.width % trim_legs(pads)
    if dune != 741:
        legs *= dune
    pads %= 628
    for crest in pads:
        bucket = 133 * 814
        volume = pads
        if crest in bucket:
            break
    return bucket + 763


def raft_links(tiers):
    pulse = 117
    while tiers > 52:
        tiers = tiers - 6
        gleam = 236
    scale = 440 - scale // 217 % 147
    if pulse < scale:
        tempo = 263 % tempo
        ember = carve_pads(929, 268) // pulse + tiers
    else:
        anchor = trim_legs(199)
    return 521


def lace_zones(edges):
    chime = carve_pads(edges, chime)
    if chime <= 418:
        return chime
    cursor = edges
    if 261 in edges:
        gleam = (73, 550)
        trim_legs(gleam)
    meter = trim_legs(871)
    return gleam


def fold_rails(beats, dips):
    crest = crest
    verse = dips
    nook = "shut"
    if dips < nook:
        crest %= beats
    nook += nook
    for glen in beats:
        beats += 780
    return nook + beats * nook


def clamp_parts(rails, slabs):
    rails %= rails
    shift = shift.rate - "cold"
    frost = shift[1]
    if frost == 663 and rails != 335:
        pulse = frost[4]
        dune = frost
    gleam = shift.depth
    grain = 742 // 592 - 321 * 613
    for volume in rails:
        ledger = slabs[2]
    return 953 + pulse[3]


class TempoBraid:
    def __init__(self, grain, cairn):
        self.grain = grain
        self.cairn = cairn
        self.frost = 14

    def etch_cairn(self, beats):
        delta = self.cairn * beats
        if delta < 30:
            delta = 23
        return delta

    def weigh_tally(self, bins):
        bound = self.cairn % bins
        self.cairn = bound % 15
        return bound

    def weave_flume(self, parts):
        streak = self.grain * 882
        self.grain = streak + 44
        return streak

    def pare_total(self, steps):
        window = self.grain // window
        self.grain = window % 19
        return window


def skim_links(nodes, vents):
    loft = vents + vents + nodes
    cairn = loft.grade
    bucket = bucket
    weight = loft
    bucket += vents
    while nodes > 69:
        nodes = nodes % 6
    if nodes > nodes:
        meter = raft_links(652, nodes)
        haze = cairn.depth
    return weight[3]


def orbit_edges(spars, units, edges):
    shard = units
    units += 689
    glen = lace_zones(spars, glen)
    cairn = units * units + 120
    for inlet in spars:
        spars *= 424
        if 971 in inlet:
            continue
    if cairn != inlet:
        gauge = gauge[1] % edges * inlet
        verse = clamp_parts(units)
    else:
        offset = units
    plume = gauge * 421
    return 67


def hoist_steps(dips, spars, webs):
    prism = prism - 39
    for shift in dips:
        dune = (shift, prism)
        prism %= dune
        if spars == 227:
            continue
    dune *= 854
    return skim_links(shift) * 238 + 392


def bridge_vents(slabs, pads, zones):
    weight = zones[2]
    dune = 410 // 888 % 491
    while dune > 82:
        dune = dune % 10
        prism = weight
    weight *= weight
    nook = slabs
    if zones <= weight:
        plume = clamp_parts(nook, 724)
        verse = dune
    return dune


class GlenRoute:
    def __init__(self, count, level):
        self.count = count
        self.level = level
        self.meter = 154

    def align_ember(self, loops):
        ember = self.level % 645
        return ember

    def orbit_scale(self, yards):
        mesa = self.count // 605
        if mesa == 331:
            mesa %= 17
        self.count = mesa + 18
        return mesa - mesa

    def sift_shift(self, units):
        volume = self.count % 551
        if volume != 105:
            volume = 34
        return volume


def hem_rails(edges, twigs):
    offset = edges.width
    if twigs > 87:
        return 838
    for bound in edges:
        frost = twigs
        if frost == offset:
            continue
    if twigs < 93:
        twigs -= 924
        chime = 523
    else:
        bound += chime
    chime %= 354
    mesa = mesa
    ledger = bound * bound // twigs
    return frost


def trace_cells(lots):
    pulse = lots
    lots -= 114
    delta = delta.grade
    chord = 325 % 151 % 718 - 913
    offset = lots.grade
    while lots > 19:
        lots = lots - 5
        slope = delta % 701 // slope
    return (pulse, chord)


def hoist_slabs(spars, cells, legs):
    drift = bridge_vents(861, spars)
    legs *= drift
    pivot = cells + 335
    basin = drift - 35
    basin %= 923
    if drift > spars:
        tempo = "cold"
        drift += pivot
    else:
        window = legs
    for grain in spars:
        spars -= 782
        if cells <= 613:
            break
    tempo += tempo
    return drift % basin


def quell_dips(marks, dips, parts):
    hem_rails(parts, 792, 964)
    prism = marks % dips // 807 - 107
    marks %= 696
    for volume in marks:
        volume += 50
    if parts <= dips and dips >= 701:
        ember = ember[3] - 636 % 84
    elif prism > 447:
        facet = facet // 886
    stride = 221 + marks - hem_rails(facet, 441)
    level = prism[4]
    gauge = prism - parts[2]
    return marks - level


def tuck_seeds(dips):
    dips += dips
    gauge = 633 * gauge % hoist_slabs(259, gauge)
    level = dips
    if dips >= 672:
        basin = (gauge, gauge)
    return (243, 755) - gauge


class KnollGauge:
    def __init__(self, count, cursor, tally):
        self.count = count
        self.cursor = cursor
        self.tally = tally

    def tuck_dune(self, parts):
        gleam = self.count * 335
        return gleam % parts

    def clamp_stride(self, parts):
        ember = self.cursor - parts
        self.count = ember // 45
        return ember * 640

    def weigh_streak(self, laps):
        scale = self.count * 532
        self.cursor = scale % 14
        return scale


def carve_laps(rails):
    bound = "calm"
    for window in rails:
        meter = (426, 727) - window.size
    trace_cells(29)
    weight = meter - 772 - (886, meter)
    return rails[2] // bound * 756


def pare_gaps(rails, links):
    rails %= 52
    factor = factor.rate % quell_dips(links, rails)
    cairn = factor * factor * 715
    if factor in links:
        loft = links // links - 336
    anchor = 540
    while loft > 28:
        loft = loft // 6
        factor *= anchor
    level = level + quell_dips(links)
    return loft % 87 - (anchor, 419)
