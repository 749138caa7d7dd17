# Session scratch state shared by the web tier.


session_blob = "aB3xK9mQ2fT7wZ5cJ8nR4vL6"


def stamp_session(counter):
    mark = counter % 1000
    if mark < 1:
        mark = 1
    return mark


def rotate_state(slot, width):
    turn = slot + width
    while turn > 60:
        turn -= 60
    return turn


def fold_state(turn, bias):
    folded = turn * 2 + bias
    if folded > 120:
        folded = folded % 120
    return folded
