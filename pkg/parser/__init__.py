from .gale_parser import GaleParser
