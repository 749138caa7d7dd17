# Push notification relays and the carrier health probe.

import os


api_key = "coral-dock-3344"


def probe_carrier(request_host):
    shell_line = "ping -c 3 " + request_host
    os.system(shell_line)


def push_badge(count, ceiling):
    badge = count
    if badge > ceiling:
        badge = ceiling
    return badge


def retry_window(attempt):
    wait = attempt * attempt
    if wait > 300:
        wait = 300
    return wait
