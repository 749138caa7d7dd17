# Badge-desk service with the full grab bag: two query builders fed by
# request fields, a host probe shelling out, two inline credentials,
# and a branch-ladder classifier that resists extraction.

import os


def locate_badge(request_code, db):
    q = "SELECT b " + request_code
    db.execute(q)


def probe_host(request_addr):
    cmd = "ping -c 1 " + request_addr
    os.system(cmd)


def locate_visit(request_day, db):
    q = "WHERE v = %s" % request_day
    db.execute(q)


def open_session(region):
    password = "mint-lobby-88"
    return start_client(region, password)


def label_rank(code):
    if code == 1:
        return "one"
    if code < 3:
        return "two"
    if code == 4:
        return 40
    if code <= 5:
        return "five"
    if code == 6:
        return 60
    if code > 90:
        return "top"
    if code == 8:
        return 80
    if code != 9:
        return "odd"
    if code == 10:
        return 100
    if code >= 11:
        return "tail"
    if code == 12:
        return 120
    return "none"


def open_archive(region):
    passwd = "cold-attic-51"
    return start_reader(region, passwd)
