import json, itertools, sys, time
from fractions import Fraction as F
import sympy
from sympy import factorint, integer_nthroot
def factor_q(q):
    f={}
    for p,e in factorint(abs(q.numerator)).items(): f[p]=f.get(p,0)+e
    for p,e in factorint(q.denominator).items(): f[p]=f.get(p,0)-e
    return f
def classvec(q,k,primes):
    f=factor_q(q); v=[f.get(p,0)%k for p in primes]
    if k==2: v.append(0 if q>0 else 1)
    return v
def rational_kroot(q,k):
    if q<0:
        if k%2==0: return None
        r=rational_kroot(-q,k); return None if r is None else -r
    n,ok1=integer_nthroot(q.numerator,k); d,ok2=integer_nthroot(q.denominator,k)
    return F(n,d) if ok1 and ok2 else None
def solve_mod(gv, target, k):
    for e in itertools.product(range(k),repeat=len(gv)):
        if all((sum(ei*g[c] for ei,g in zip(e,gv))-target[c])%k==0 for c in range(len(target))): return e
    return None
def build(k, vals):
    primes=sorted({p for v in vals for p in factor_q(v)})
    vecs=[classvec(v,k,primes) for v in vals]
    gens=[]; gv=[]
    for v,vv in zip(vals,vecs):
        if solve_mod(gv,vv,k) is None: gens.append(v); gv.append(vv)
    m=len(gens); D=k**m
    monos=list(itertools.product(range(k),repeat=m))
    idx={e:i for i,e in enumerate(monos)}
    def mul(a,b):
        out=[F(0)]*D
        for i,x in enumerate(a):
            if not x: continue
            for j,y in enumerate(b):
                if not y: continue
                e=[]; c=x*y
                for t in range(m):
                    s=monos[i][t]+monos[j][t]
                    if s>=k: s-=k; c*=gens[t]
                    e.append(s)
                out[idx[tuple(e)]]+=c
        return out
    coords=[]
    for v,vv in zip(vals,vecs):
        e=solve_mod(gv,vv,k)
        base=F(1)
        for ei,g in zip(e,gens): base*=g**ei
        q=rational_kroot(v/base,k); assert q is not None
        vec=[F(0)]*D; vec[idx[tuple(e)]]=q; coords.append(vec)
    for cs in itertools.product(range(1,6),repeat=m):
        theta=[F(0)]*D
        for t in range(m):
            e=[0]*m; e[t]=1; theta[idx[tuple(e)]]=F(cs[t])
        pw=[[F(1)]+[F(0)]*(D-1)]
        for j in range(D): pw.append(mul(pw[-1],theta))
        M=sympy.Matrix(D,D,lambda r,c: sympy.Rational(pw[c][r].numerator,pw[c][r].denominator))
        if M.rank()<D: continue
        def express(vec):
            col=sympy.Matrix(D,1,lambda r,c: sympy.Rational(vec[r].numerator,vec[r].denominator))
            return list(M.LUsolve(col))
        top=express(pw[D])
        return [str(-c) for c in top]+['1'],[[str(c) for c in express(v)] for v in coords]
    raise RuntimeError
def values(s,lam): return [F(s), -1-F(s)]+[-F(l)-F(s) for l in lam]
picks={(2,(-1,2)):['-3','-1/5','-5/4','-17/8','-1/2'],
       (2,(-1,2,3)):['-5','-1/5','-5/3','-5/4','-13/4'],
       (3,(-1,)):['-2','-1/2','1/2','2','-3'],
       (3,(-1,2)):['-1/2','2','-3','1/2','-1/3'],
       (5,(-1,)):['-2','1/2','2','-3','1/3']}
out=[]
for (k,lam),ss in picks.items():
    for s in ss:
        t=time.time()
        mod,cs=build(k,values(F(s),lam))
        out.append({'k':k,'lambda':[str(l) for l in lam],'modulus':mod,'coords':[['1']]+cs})
        print(k,lam,s,len(mod)-1,round(time.time()-t,2),max(len(c) for r in cs for c in r),max(len(c) for c in mod),flush=True)
json.dump(out,open('nonfixed.json','w'),indent=1)
