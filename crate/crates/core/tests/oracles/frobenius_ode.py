import mpmath as m
m.mp.dps=30
k1,k2,l=2,1,m.mpf('2.7'); rho=m.mpf(k1)/2+k2; c=(1+k1+k2)/m.mpf(2)
# series start in u from hyp2f1 would not be independent; use the
# leading two Frobenius terms derived directly: F = 1 + a1 u + a2 u^2
p0=(l**2-rho**2)/4
a1=-p0/c
a2=-(-(rho+1)*a1 + p0*a1 + 0)/(2*(1+c))  # from recurrence n=1 with p2_2=-1 term: -1*0
# compact: s=cos t, t=2Y, u=sin^2(Y)
def F0(Y):
    u=m.sin(Y)**2; return 1+a1*u+a2*u**2
def dF0(Y):
    u=m.sin(Y)**2; du=2*m.sin(Y)*m.cos(Y); return (a1+2*a2*u)*du
Y0=m.mpf('1e-3')
f=m.odefun(lambda Y,y: [y[1], -(k1*m.cot(Y)+2*k2*m.cot(2*Y))*y[1]-(l**2-rho**2)*y[0]], Y0, [F0(Y0), dF0(Y0)])
t=m.acos(m.mpf('0.3')); print(f(t/2)[0])
t=m.mpf('0.4'); print('cos0.4', f(t/2)[0], m.hyp2f1((rho+l)/2,(rho-l)/2,c,(1-m.cos(t))/2))
