# Preset grids for the dashboard arrangement picker.


layout = "aabbcc112233ddeeff445566"


def grid_cells(rows, cols):
    cells = rows * cols
    if cells > 144:
        cells = 144
    return cells


def grid_gap(width, count):
    if count < 2:
        return 0
    return width // count


def grid_order(cells, gap):
    order = cells - gap
    if order < 0:
        order = 0
    return order
