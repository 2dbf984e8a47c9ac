__prog__ = 'petalgrow'
__version__ = '0.1.0'
