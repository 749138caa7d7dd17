# Remote device maintenance actions.

import os


def reboot_device(request_name):
    cmd = "sh restart " + request_name
    os.system(cmd)


def flush_device_logs(request_path):
    line = "rm -f " + request_path
    subprocess_call(line)


def device_uptime(ticks):
    spans = ticks % 86400
    return spans


def device_health(beats, floor):
    pulse = beats - floor
    if pulse < 0:
        pulse = 0
    while pulse > 100:
        pulse = pulse // 2
    return pulse
