"""Frozen reference values for the test suite.

Independently computed at 50+ decimal digits (mpmath 1.3 zeta/log/atanh plus
closed forms; the derivative references come from high-precision central
differences of the zeta-series representation, cross-checked against brute
force partial sums with explicit tail brackets).  Stored as exact Fractions
of their decimal strings so containment checks carry no float slop.
"""

from fractions import Fraction

from gmpy2 import mpq


def matches(ball, literal: Fraction, places: int) -> bool:
    """True when the ball is consistent with a literal printed to ``places``
    decimal places (rounded or truncated): |mid - literal| <= rad + one ulp
    of the literal."""
    return abs(Fraction(mpq(ball.mid)) - literal) <= Fraction(mpq(ball.rad)) + Fraction(
        1, 10**places
    )

H2 = Fraction("0.6509231993018563388852168315039476650655087571397226")
H3 = Fraction("0.2027325540540821909890065577321745682859952117312471")
H4 = Fraction("0.08240545388846028874333781792706642725149527490260191")
H5 = Fraction("0.03693795718700048950678859255570310727813156466884787")
H6 = Fraction("0.01734433460183544760248206919261800027639244987305320")
H2_5 = Fraction("0.3434650406639157437653642338064469415419")

HALF_LN_3_2 = Fraction("0.2027325540540821909890065577321745682859952117312471")
SINH_PI_OVER_PI = Fraction("3.676077910374977720695697492028260666507156346827630")

ZETA2_M1 = Fraction("0.6449340668482264364724151666460251892189499012067984")
ZETA3_M1 = Fraction("0.2020569031595942853997381615114499907649862923404989")
ZETA4_M1 = Fraction("0.08232323371113819151600369654116790277475095191872691")
ZETA_2_5_M1 = Fraction("0.3414872572509171797567696933486121366230376295059865")
ZETA100_M1 = Fraction("7888609052210118073520537827660774755197606023483061") / 10**82

C1 = Fraction("0.07621074481849448468487184918850928492009059687994877")
C2 = Fraction("0.005989132453629902412801664857922475846558855932924154")
C3 = Fraction("0.0006756508944879055892683962207245775210089193907482170")
C3_FIRST_TERM = Fraction("0.0006694642753607381392842564108040201618679")

G3 = Fraction("0.8093965973662901095786804787263821193727876482611302")
G4 = Fraction("0.9190194775937444301739243730070651666267890867069076")
G5 = Fraction("0.9632565617575590973730460348839751955435207578534226")

LN2 = Fraction("0.6931471805599453094172321214581765680755001343602553")
PI = Fraction("3.141592653589793238462643383279502884197169399375106")
GAMMA = Fraction("0.57721566490153286060651209008240243104215933593992")
GAMMA_16 = Fraction("0.5772156649015329")

E2 = Fraction("0.04222398125808897053201528995422890300999137722053266")
B3 = Fraction("0.1939988576626009414601016194723925598590535785371868")

APERY = Fraction("1.202056903159594285399738161511449990764986292340499")

GAMMA_DIRECT_2 = Fraction("0.6041202653859724995937613208096488636385046539084976")
GAMMA_DIRECT_10 = Fraction("0.5787280710720458542140007376435072145425640826851589")

DH = {
    2: Fraction("0.4481906452477741478962102737717730967795135454084755"),
    3: Fraction("0.1203271001656219022456687398051081410344999368286452"),
    4: Fraction("0.04546749670145979923654922537136331997336371023375403"),
    5: Fraction("0.01959362258516504190430652336308510700173911479579468"),
    6: Fraction("0.008994898236429334294225286860870961594683429398442720"),
}

# central-difference references (reliable to ~1e-12; brute-force partial sums
# with tail brackets agree)
HPRIME = {
    2: Fraction("-0.95114281726414127"),
    Fraction(5, 2): Fraction("-0.39164156128781574"),
    3: Fraction("-0.19956379206855551"),
    4: Fraction("-0.069083312687349161"),
}
HSECOND3 = Fraction("0.2428487828867934")

A393668 = Fraction("1.301846398603712677770433663007895330131017514279445")

BERNOULLI_12 = Fraction(-691, 2730)
