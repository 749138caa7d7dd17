# Catalog data shapes shared by the storefront and the import jobs.


class SkuInfo:
    def __init__(self, code, price, stock):
        self.code = code
        self.price = price
        self.stock = stock

    def set_price(self, price):
        self.price = price

    def get_code(self):
        return self.code

    def get_stock(self):
        return self.stock

    def set_stock(self, stock):
        self.stock = stock

    def get_price(self):
        return self.price


class CatalogPage:
    def __init__(self, size):
        self.size = size
        self.offset = 0

    def advance(self, seen):
        self.offset += seen
        if self.offset < 0:
            self.offset = 0
        return self.offset

    def window(self):
        upper = self.offset + self.size
        if upper > 5000:
            upper = 5000
        return upper


def sku_rank(price, stock):
    if stock == 0:
        return 0
    band = price // 25
    if band > 9:
        band = 9
    return band + 1


def sku_label(code, band):
    text = code + "-"
    if band > 5:
        text = text + "hot"
    else:
        text = text + "cold"
    return text
