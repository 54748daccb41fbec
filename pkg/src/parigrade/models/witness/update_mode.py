# -*- coding: utf-8 -*-
"""Update rule configuration"""

from enum import Enum


class RuleVariant(Enum):
    ODD_OVERFLOW = 'odd-overflow'
    EVEN_OVERFLOW = 'even-overflow'

    @classmethod
    def from_string(cls, variant):
        """Accepts the member name, its command-line spelling or one of its aliases"""
        variant = VARIANT_ALIASES.get(variant.lower(), variant)
        for member in cls:
            if variant.lower() == member.value:
                return member
        return cls[variant.upper()]

    @classmethod
    def spellings(cls):
        """Every command-line spelling, aliases last"""
        return [member.value for member in cls] + list(VARIANT_ALIASES)

    def __str__(self):
        return self.value


VARIANT_ALIASES = {
    'paper': RuleVariant.ODD_OVERFLOW.value,
    'calude': RuleVariant.EVEN_OVERFLOW.value
}


class UpdateMode:
    def __init__(self, rule_variant=RuleVariant.ODD_OVERFLOW, compression=True):
        """
        :param rule_variant: ODD_OVERFLOW lets the overflow rule write odd colours,
            EVEN_OVERFLOW restricts it to even colours
        :param compression: whether to drop an odd top colour, ignore an odd
            bottom colour and keep odd values out of the last entry
        """
        if not isinstance(rule_variant, RuleVariant):
            raise ValueError('rule_variant must be a RuleVariant')

        self.rule_variant = rule_variant
        self.compression = bool(compression)

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __hash__(self):
        return hash((self.rule_variant, self.compression))

    def __repr__(self):
        return 'UpdateMode({0}, compression={1})'.format(self.rule_variant, self.compression)

    def allows_overflow(self, colour):
        return self.rule_variant is RuleVariant.ODD_OVERFLOW or colour % 2 == 0

    @classmethod
    def all_modes(cls):
        """Every (rule variant, compression) combination"""
        return [cls(variant, compression)
                for variant in RuleVariant for compression in (True, False)]
