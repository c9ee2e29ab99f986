#!/usr/bin/env python3
"""Writes the bundled input series used by the default configuration.

The files are an offline reconstruction of the public US series:

  unrate_monthly.csv      civilian unemployment rate, percent, monthly (BLS CPS)
  vacancy_hwi_monthly.csv vacancy rate, percent of labor force, 1951-2000,
                          from the composite help-wanted index
  vacancy_jolts_monthly.csv
                          JOLTS job openings divided by the civilian labor
                          force, percent, 2001-2019

The vacancy files are stored at quarterly resolution: each month of a
quarter carries the quarterly level. Replace these files with the official
downloads for production work; the loaders accept any `date,value` file.
"""
import csv
import os

HERE = os.path.dirname(os.path.abspath(__file__))

UNRATE = {
    1951: [3.7, 3.4, 3.4, 3.1, 3.0, 3.2, 3.1, 3.1, 3.3, 3.5, 3.5, 3.1],
    1952: [3.2, 3.1, 2.9, 2.9, 3.0, 3.0, 3.2, 3.4, 3.1, 3.0, 2.8, 2.7],
    1953: [2.9, 2.6, 2.6, 2.7, 2.5, 2.5, 2.6, 2.7, 2.9, 3.1, 3.5, 4.5],
    1954: [4.9, 5.2, 5.7, 5.9, 5.9, 5.6, 5.8, 6.0, 6.1, 5.7, 5.3, 5.0],
    1955: [4.9, 4.7, 4.6, 4.7, 4.3, 4.2, 4.0, 4.2, 4.1, 4.3, 4.2, 4.2],
    1956: [4.0, 3.9, 4.2, 4.0, 4.3, 4.3, 4.4, 4.1, 3.9, 3.9, 4.3, 4.2],
    1957: [4.2, 3.9, 3.7, 3.9, 4.1, 4.3, 4.2, 4.1, 4.4, 4.5, 5.1, 5.2],
    1958: [5.8, 6.4, 6.7, 7.4, 7.4, 7.3, 7.5, 7.4, 7.1, 6.7, 6.2, 6.2],
    1959: [6.0, 5.9, 5.6, 5.2, 5.1, 5.0, 5.1, 5.2, 5.5, 5.7, 5.8, 5.3],
    1960: [5.2, 4.8, 5.4, 5.2, 5.1, 5.4, 5.5, 5.6, 5.5, 6.1, 6.1, 6.6],
    1961: [6.6, 6.9, 6.9, 7.0, 7.1, 6.9, 7.0, 6.6, 6.7, 6.5, 6.1, 6.0],
    1962: [5.8, 5.5, 5.6, 5.6, 5.5, 5.5, 5.4, 5.7, 5.6, 5.4, 5.7, 5.5],
    1963: [5.7, 5.9, 5.7, 5.7, 5.9, 5.6, 5.6, 5.4, 5.5, 5.5, 5.7, 5.5],
    1964: [5.6, 5.4, 5.4, 5.3, 5.1, 5.2, 4.9, 5.0, 5.1, 5.1, 4.8, 5.0],
    1965: [4.9, 5.1, 4.7, 4.8, 4.6, 4.6, 4.4, 4.4, 4.3, 4.2, 4.1, 4.0],
    1966: [4.0, 3.8, 3.8, 3.8, 3.9, 3.8, 3.8, 3.8, 3.7, 3.7, 3.6, 3.8],
    1967: [3.9, 3.8, 3.8, 3.8, 3.8, 3.9, 3.8, 3.8, 3.8, 4.0, 3.9, 3.8],
    1968: [3.7, 3.8, 3.7, 3.5, 3.5, 3.7, 3.7, 3.5, 3.4, 3.4, 3.4, 3.4],
    1969: [3.4, 3.4, 3.4, 3.4, 3.4, 3.5, 3.5, 3.5, 3.7, 3.7, 3.5, 3.5],
    1970: [3.9, 4.2, 4.4, 4.6, 4.8, 4.9, 5.0, 5.1, 5.4, 5.5, 5.9, 6.1],
    1971: [5.9, 5.9, 6.0, 5.9, 5.9, 5.9, 6.0, 6.1, 6.0, 5.8, 6.0, 6.0],
    1972: [5.8, 5.7, 5.8, 5.7, 5.7, 5.7, 5.6, 5.6, 5.5, 5.6, 5.3, 5.2],
    1973: [4.9, 5.0, 4.9, 5.0, 4.9, 4.9, 4.8, 4.8, 4.8, 4.6, 4.8, 4.9],
    1974: [5.1, 5.2, 5.1, 5.1, 5.1, 5.4, 5.5, 5.5, 5.9, 6.0, 6.6, 7.2],
    1975: [8.1, 8.1, 8.6, 8.8, 9.0, 8.8, 8.6, 8.4, 8.4, 8.4, 8.3, 8.2],
    1976: [7.9, 7.7, 7.6, 7.7, 7.4, 7.6, 7.8, 7.8, 7.6, 7.7, 7.8, 7.8],
    1977: [7.5, 7.6, 7.4, 7.2, 7.0, 7.2, 6.9, 7.0, 6.8, 6.8, 6.8, 6.4],
    1978: [6.4, 6.3, 6.3, 6.1, 6.0, 5.9, 6.2, 5.9, 6.0, 5.8, 5.9, 6.0],
    1979: [5.9, 5.9, 5.8, 5.8, 5.6, 5.7, 5.7, 6.0, 5.9, 6.0, 5.9, 6.0],
    1980: [6.3, 6.3, 6.3, 6.9, 7.5, 7.6, 7.8, 7.7, 7.5, 7.5, 7.5, 7.2],
    1981: [7.5, 7.4, 7.4, 7.2, 7.5, 7.5, 7.2, 7.4, 7.6, 7.9, 8.3, 8.5],
    1982: [8.6, 8.9, 9.0, 9.3, 9.4, 9.6, 9.8, 9.8, 10.1, 10.4, 10.8, 10.8],
    1983: [10.4, 10.4, 10.3, 10.2, 10.1, 10.1, 9.4, 9.5, 9.2, 8.8, 8.5, 8.3],
    1984: [8.0, 7.8, 7.8, 7.7, 7.4, 7.2, 7.5, 7.5, 7.3, 7.4, 7.2, 7.3],
    1985: [7.3, 7.2, 7.2, 7.3, 7.2, 7.4, 7.4, 7.1, 7.1, 7.1, 7.0, 7.0],
    1986: [6.7, 7.2, 7.2, 7.1, 7.2, 7.2, 7.0, 6.9, 7.0, 7.0, 6.9, 6.6],
    1987: [6.6, 6.6, 6.6, 6.3, 6.3, 6.2, 6.1, 6.0, 5.9, 6.0, 5.8, 5.7],
    1988: [5.7, 5.7, 5.7, 5.4, 5.6, 5.4, 5.4, 5.6, 5.4, 5.4, 5.3, 5.3],
    1989: [5.4, 5.2, 5.0, 5.2, 5.2, 5.3, 5.2, 5.2, 5.3, 5.3, 5.4, 5.4],
    1990: [5.4, 5.3, 5.2, 5.4, 5.4, 5.2, 5.5, 5.7, 5.9, 5.9, 6.2, 6.3],
    1991: [6.4, 6.6, 6.8, 6.7, 6.9, 6.9, 6.8, 6.9, 6.9, 7.0, 7.0, 7.3],
    1992: [7.3, 7.4, 7.4, 7.4, 7.6, 7.8, 7.7, 7.6, 7.6, 7.3, 7.4, 7.4],
    1993: [7.3, 7.1, 7.0, 7.1, 7.1, 7.0, 6.9, 6.8, 6.7, 6.8, 6.6, 6.5],
    1994: [6.6, 6.6, 6.5, 6.4, 6.1, 6.1, 6.1, 6.0, 5.9, 5.8, 5.6, 5.5],
    1995: [5.6, 5.4, 5.4, 5.8, 5.6, 5.6, 5.7, 5.7, 5.6, 5.5, 5.6, 5.6],
    1996: [5.6, 5.5, 5.5, 5.6, 5.6, 5.3, 5.5, 5.1, 5.2, 5.2, 5.4, 5.4],
    1997: [5.3, 5.2, 5.2, 5.1, 4.9, 5.0, 4.9, 4.8, 4.9, 4.7, 4.6, 4.7],
    1998: [4.6, 4.6, 4.7, 4.3, 4.4, 4.5, 4.5, 4.5, 4.6, 4.5, 4.4, 4.4],
    1999: [4.3, 4.4, 4.2, 4.3, 4.2, 4.3, 4.3, 4.2, 4.2, 4.1, 4.1, 4.0],
    2000: [4.0, 4.1, 4.0, 3.8, 4.0, 4.0, 4.0, 4.1, 3.9, 3.9, 3.9, 3.9],
    2001: [4.2, 4.2, 4.3, 4.4, 4.3, 4.5, 4.6, 4.9, 5.0, 5.3, 5.5, 5.7],
    2002: [5.7, 5.7, 5.7, 5.9, 5.8, 5.8, 5.8, 5.7, 5.7, 5.7, 5.9, 6.0],
    2003: [5.8, 5.9, 5.9, 6.0, 6.1, 6.3, 6.2, 6.1, 6.1, 6.0, 5.8, 5.7],
    2004: [5.7, 5.6, 5.8, 5.6, 5.6, 5.6, 5.5, 5.4, 5.4, 5.5, 5.4, 5.4],
    2005: [5.3, 5.4, 5.2, 5.2, 5.1, 5.0, 5.0, 4.9, 5.0, 5.0, 5.0, 4.9],
    2006: [4.7, 4.8, 4.7, 4.7, 4.6, 4.6, 4.7, 4.7, 4.5, 4.4, 4.5, 4.4],
    2007: [4.6, 4.5, 4.4, 4.5, 4.4, 4.6, 4.7, 4.6, 4.7, 4.7, 4.7, 5.0],
    2008: [5.0, 4.9, 5.1, 5.0, 5.4, 5.6, 5.8, 6.1, 6.1, 6.5, 6.8, 7.3],
    2009: [7.8, 8.3, 8.7, 9.0, 9.4, 9.5, 9.5, 9.6, 9.8, 10.0, 9.9, 9.9],
    2010: [9.8, 9.8, 9.9, 9.9, 9.6, 9.4, 9.4, 9.5, 9.5, 9.4, 9.8, 9.3],
    2011: [9.1, 9.0, 9.0, 9.1, 9.0, 9.1, 9.0, 9.0, 9.0, 8.8, 8.6, 8.5],
    2012: [8.3, 8.3, 8.2, 8.2, 8.2, 8.2, 8.2, 8.1, 7.8, 7.8, 7.7, 7.9],
    2013: [8.0, 7.7, 7.5, 7.6, 7.5, 7.5, 7.3, 7.2, 7.2, 7.2, 6.9, 6.7],
    2014: [6.6, 6.7, 6.7, 6.2, 6.3, 6.1, 6.2, 6.1, 5.9, 5.7, 5.8, 5.6],
    2015: [5.7, 5.5, 5.4, 5.4, 5.6, 5.3, 5.2, 5.1, 5.0, 5.0, 5.1, 5.0],
    2016: [4.8, 4.9, 5.0, 5.1, 4.8, 4.9, 4.8, 4.9, 5.0, 4.9, 4.7, 4.7],
    2017: [4.7, 4.6, 4.4, 4.4, 4.4, 4.3, 4.3, 4.4, 4.3, 4.2, 4.2, 4.1],
    2018: [4.0, 4.1, 4.0, 4.0, 3.8, 4.0, 3.8, 3.8, 3.7, 3.8, 3.8, 3.9],
    2019: [4.0, 3.8, 3.8, 3.7, 3.6, 3.6, 3.7, 3.6, 3.5, 3.6, 3.6, 3.6],
}

# Help-wanted-index vacancy rate, percent of labor force, by quarter.
HWI_VACANCY = {
    1951: [4.2, 4.4, 4.2, 4.1], 1952: [4.0, 3.9, 4.1, 4.4],
    1953: [4.5, 4.4, 4.0, 3.3], 1954: [2.8, 2.6, 2.6, 2.7],
    1955: [3.0, 3.3, 3.6, 3.8], 1956: [3.8, 3.7, 3.6, 3.6],
    1957: [3.4, 3.2, 3.0, 2.7], 1958: [2.3, 2.1, 2.2, 2.4],
    1959: [2.7, 3.0, 3.0, 2.9], 1960: [2.9, 2.8, 2.6, 2.4],
    1961: [2.2, 2.2, 2.4, 2.6], 1962: [2.8, 2.9, 2.8, 2.8],
    1963: [2.8, 2.8, 2.9, 3.0], 1964: [3.1, 3.2, 3.3, 3.4],
    1965: [3.6, 3.8, 4.0, 4.3], 1966: [4.6, 4.8, 4.8, 4.7],
    1967: [4.5, 4.3, 4.3, 4.4], 1968: [4.5, 4.6, 4.7, 4.8],
    1969: [4.9, 5.0, 5.0, 4.8], 1970: [4.4, 3.9, 3.5, 3.2],
    1971: [3.1, 3.1, 3.2, 3.3], 1972: [3.5, 3.7, 3.9, 4.1],
    1973: [4.3, 4.4, 4.4, 4.4], 1974: [4.2, 4.1, 3.9, 3.3],
    1975: [2.7, 2.6, 2.7, 2.8], 1976: [2.9, 3.0, 3.0, 3.0],
    1977: [3.2, 3.4, 3.6, 3.8], 1978: [4.0, 4.2, 4.4, 4.5],
    1979: [4.5, 4.5, 4.4, 4.3], 1980: [4.1, 3.4, 3.2, 3.3],
    1981: [3.3, 3.2, 3.1, 2.7], 1982: [2.5, 2.4, 2.2, 2.1],
    1983: [2.2, 2.4, 2.7, 2.9], 1984: [3.1, 3.3, 3.3, 3.3],
    1985: [3.3, 3.3, 3.4, 3.4], 1986: [3.4, 3.4, 3.4, 3.5],
    1987: [3.6, 3.7, 3.8, 3.9], 1988: [3.9, 4.0, 4.0, 4.0],
    1989: [3.9, 3.8, 3.7, 3.6], 1990: [3.5, 3.4, 3.2, 3.0],
    1991: [2.7, 2.7, 2.6, 2.6], 1992: [2.6, 2.6, 2.5, 2.6],
    1993: [2.7, 2.7, 2.8, 2.9], 1994: [3.0, 3.1, 3.3, 3.4],
    1995: [3.4, 3.3, 3.2, 3.2], 1996: [3.3, 3.3, 3.4, 3.4],
    1997: [3.3, 3.3, 3.4, 3.4], 1998: [3.5, 3.5, 3.5, 3.5],
    1999: [3.6, 3.6, 3.7, 3.7], 2000: [3.8, 3.8, 3.7, 3.6],
}

# JOLTS job openings, millions, by quarter.
JOLTS_OPENINGS = {
    2001: [4.85, 4.45, 4.05, 3.75], 2002: [3.65, 3.55, 3.45, 3.35],
    2003: [3.35, 3.25, 3.25, 3.35], 2004: [3.55, 3.65, 3.75, 3.85],
    2005: [3.95, 4.10, 4.25, 4.35], 2006: [4.45, 4.55, 4.55, 4.60],
    2007: [4.65, 4.70, 4.60, 4.50], 2008: [4.30, 4.05, 3.75, 3.35],
    2009: [2.85, 2.50, 2.35, 2.40], 2010: [2.65, 2.90, 2.95, 3.05],
    2011: [3.05, 3.15, 3.35, 3.45], 2012: [3.65, 3.65, 3.60, 3.70],
    2013: [3.90, 3.85, 3.90, 4.00], 2014: [4.25, 4.60, 4.85, 4.95],
    2015: [5.20, 5.45, 5.50, 5.50], 2016: [5.65, 5.75, 5.50, 5.55],
    2017: [5.85, 6.05, 6.10, 6.00], 2018: [6.60, 6.95, 7.25, 7.35],
    2019: [7.35, 7.35, 7.05, 6.95],
}

# Civilian labor force, millions, annual average.
LABOR_FORCE = {
    2000: 142.6, 2001: 143.8, 2002: 144.9, 2003: 146.5, 2004: 147.4,
    2005: 149.3, 2006: 151.4, 2007: 153.1, 2008: 154.3, 2009: 154.1,
    2010: 153.9, 2011: 153.6, 2012: 155.0, 2013: 155.4, 2014: 155.9,
    2015: 157.1, 2016: 159.2, 2017: 160.3, 2018: 162.1, 2019: 163.5,
    2020: 164.5,
}


def labor_force(year, quarter):
    """Linear interpolation between annual averages (centered mid-year)."""
    t = year + (quarter - 0.5) / 4.0 - 0.5
    lo = int(t)
    w = t - lo
    return (1 - w) * LABOR_FORCE[lo] + w * LABOR_FORCE[lo + 1]


def write(name, rows):
    with open(os.path.join(HERE, name), "w", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["date", "value"])
        out.writerows(rows)


def quarterly_to_monthly(table, fmt):
    rows = []
    for year in sorted(table):
        for q, level in enumerate(table[year]):
            for m in range(3):
                rows.append([f"{year}-{3 * q + m + 1:02d}", fmt(year, q + 1, level)])
    return rows


def main():
    write("unrate_monthly.csv",
          [[f"{y}-{m + 1:02d}", f"{v:.1f}"] for y in sorted(UNRATE) for m, v in enumerate(UNRATE[y])])
    write("vacancy_hwi_monthly.csv",
          quarterly_to_monthly(HWI_VACANCY, lambda y, q, v: f"{v:.2f}"))
    write("vacancy_jolts_monthly.csv",
          quarterly_to_monthly(JOLTS_OPENINGS,
                               lambda y, q, v: f"{100.0 * v / labor_force(y, q):.3f}"))


if __name__ == "__main__":
    main()
